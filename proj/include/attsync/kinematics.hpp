#pragma once

#include <span>
#include <vector>

#include "attsync/so3.hpp"

namespace attsync {

/// Stacked agent states x = [x_1; ...; x_n]. The simulator also uses this for
/// states that have left the chart (a singularity sample), so no norm check
/// happens here; see make_network_state.
using StackedVec3 = std::vector<Vec3>;

/// Body angular velocity, rad/s.
struct BodyVelocity {
  Vec3 omega = Vec3::Zero();
};

/// L_x for one axis-angle state, mapping body angular velocity to dx/dt.
/// L_x = r I + (1 - r) x x^T / |x|^2 + hat(x)/2 with r = sinc_ratio(|x|).
class TransitionMatrix {
 public:
  const Mat3& matrix() const { return matrix_; }
  const AxisAngle& source_state() const { return source_; }
  Mat3 symmetric() const { return 0.5 * (matrix_ + matrix_.transpose()); }

  friend TransitionMatrix transition_matrix(const AxisAngle& x);

 private:
  TransitionMatrix(Mat3 m, AxisAngle x) : matrix_(std::move(m)), source_(x) {}

  Mat3 matrix_;
  AxisAngle source_;
};

TransitionMatrix transition_matrix(const AxisAngle& x);

/// L^1_x = r I + (1 - r) x x^T / |x|^2; eigenvalues {r, r, 1}.
Mat3 symmetric_part(const AxisAngle& x);

/// Smallest eigenvalue of L^1_x, i.e. sinc_ratio(|x|). Throws DomainError at
/// |x| >= pi where it degenerates to 0.
double lambda_min(const AxisAngle& x);

/// dx_i/dt = L_{x_i} omega_i for every agent. Throws ContractViolation when the
/// sizes differ and DomainError when some |x_i| > pi.
StackedVec3 state_derivative(std::span<const Vec3> x, std::span<const Vec3> omega);

/// Applies L_x to w without building the matrix. Caller guarantees |x| <= pi.
Vec3 apply_transition(const Vec3& x, const Vec3& w);

}  // namespace attsync
