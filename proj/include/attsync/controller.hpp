#pragma once

#include <span>
#include <string>
#include <vector>

#include "attsync/graph.hpp"
#include "attsync/kinematics.hpp"

namespace attsync {

/// How the discontinuous sign is evaluated. Exact follows sign(0) = 0;
/// Deadband and Smooth are regularized selections used for integration.
struct SignMode {
  enum class Kind { Exact, Deadband, Smooth };

  Kind kind = Kind::Deadband;
  double epsilon = 1e-3;

  static SignMode exact() { return {Kind::Exact, 0.0}; }
  /// Throws ContractViolation unless eps > 0.
  static SignMode deadband(double eps);
  static SignMode smooth(double eps);

  std::string name() const;
  bool operator==(const SignMode&) const = default;
};

/// Validated stacked agent states: every |x_i| <= pi (+ tol::kStructural).
class NetworkState {
 public:
  NetworkState() = default;
  explicit NetworkState(StackedVec3 agents);

  std::size_t size() const { return agents_.size(); }
  const StackedVec3& agents() const { return agents_; }
  std::span<const Vec3> view() const { return agents_; }
  const Vec3& operator[](std::size_t i) const { return agents_[i]; }

 private:
  StackedVec3 agents_;
};

double sign_value(double a, const SignMode& mode);

/// omega_i = sum over j in N_i of sign(x_j - x_i), componentwise. Serial
/// reference kernel.
StackedVec3 control_input(std::span<const Vec3> x, const Graph& g, const SignMode& mode);

/// Same values as control_input, agents split across OpenMP threads.
StackedVec3 control_input_parallel(std::span<const Vec3> x, const Graph& g, const SignMode& mode);

/// Stacked incidence form -(B kron I3) sign((B kron I3)^T x).
StackedVec3 control_input_incidence(std::span<const Vec3> x, const Graph& g, const SignMode& mode);

/// Agent count from which closed_loop_rhs switches to the parallel kernel.
inline constexpr std::size_t kParallelAgentThreshold = 4096;

/// dx/dt = L_x omega(x). Throws SingularityError when some |x_i| >= pi and
/// ContractViolation when x does not match the graph.
StackedVec3 closed_loop_rhs(std::span<const Vec3> x, const Graph& g, const SignMode& mode);

}  // namespace attsync
