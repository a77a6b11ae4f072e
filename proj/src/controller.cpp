#include "attsync/controller.hpp"

#include <cmath>
#include <numbers>

#include "attsync/errors.hpp"

namespace attsync {

namespace {

void check_size(std::span<const Vec3> x, const Graph& g) {
  if (x.size() != g.node_count())
    throw ContractViolation("controller: state has " + std::to_string(x.size()) +
                            " agents, graph has " + std::to_string(g.node_count()));
}

Vec3 sign_vec(const Vec3& d, const SignMode& mode) {
  return {sign_value(d.x(), mode), sign_value(d.y(), mode), sign_value(d.z(), mode)};
}

Vec3 agent_input(std::span<const Vec3> x, const Graph& g, const SignMode& mode, std::size_t i) {
  Vec3 omega = Vec3::Zero();
  for (NodeId j : g.neighbors(i + 1)) omega += sign_vec(x[j - 1] - x[i], mode);
  return omega;
}

}  // namespace

SignMode SignMode::deadband(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw ContractViolation("sign mode: deadband epsilon must be > 0");
  return {Kind::Deadband, eps};
}

SignMode SignMode::smooth(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw ContractViolation("sign mode: smooth epsilon must be > 0");
  return {Kind::Smooth, eps};
}

std::string SignMode::name() const {
  switch (kind) {
    case Kind::Exact: return "exact";
    case Kind::Deadband: return "deadband";
    case Kind::Smooth: return "smooth";
  }
  return "unknown";
}

NetworkState::NetworkState(StackedVec3 agents) : agents_(std::move(agents)) {
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (!agents_[i].allFinite())
      throw DomainError("network state: agent " + std::to_string(i + 1) + " is not finite");
    if (agents_[i].norm() > std::numbers::pi + tol::kStructural)
      throw DomainError("network state: agent " + std::to_string(i + 1) + " has norm " +
                        std::to_string(agents_[i].norm()) + " > pi");
  }
}

double sign_value(double a, const SignMode& mode) {
  switch (mode.kind) {
    case SignMode::Kind::Exact:
      return a > 0.0 ? 1.0 : (a < 0.0 ? -1.0 : 0.0);
    case SignMode::Kind::Deadband:
      if (std::abs(a) <= mode.epsilon) return 0.0;
      return a > 0.0 ? 1.0 : -1.0;
    case SignMode::Kind::Smooth:
      return std::tanh(a / mode.epsilon);
  }
  return 0.0;
}

StackedVec3 control_input(std::span<const Vec3> x, const Graph& g, const SignMode& mode) {
  check_size(x, g);
  StackedVec3 omega(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) omega[i] = agent_input(x, g, mode, i);
  return omega;
}

StackedVec3 control_input_parallel(std::span<const Vec3> x, const Graph& g, const SignMode& mode) {
  check_size(x, g);
  StackedVec3 omega(x.size());
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    omega[static_cast<std::size_t>(i)] = agent_input(x, g, mode, static_cast<std::size_t>(i));
  return omega;
}

StackedVec3 control_input_incidence(std::span<const Vec3> x, const Graph& g, const SignMode& mode) {
  check_size(x, g);
  const IncidenceMatrix b = g.incidence_matrix();
  const auto n = b.rows();
  const auto m = b.cols();

  // y = B^T x, one 3-block per edge
  std::vector<Vec3> edge_sign(static_cast<std::size_t>(m), Vec3::Zero());
  for (Eigen::Index k = 0; k < m; ++k) {
    Vec3 y = Vec3::Zero();
    for (Eigen::Index i = 0; i < n; ++i) y += b(i, k) * x[static_cast<std::size_t>(i)];
    edge_sign[static_cast<std::size_t>(k)] = sign_vec(y, mode);
  }

  StackedVec3 omega(x.size(), Vec3::Zero());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < m; ++k)
      omega[static_cast<std::size_t>(i)] -= b(i, k) * edge_sign[static_cast<std::size_t>(k)];
  return omega;
}

StackedVec3 closed_loop_rhs(std::span<const Vec3> x, const Graph& g, const SignMode& mode) {
  check_size(x, g);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i].norm() < std::numbers::pi))
      throw SingularityError("closed loop: agent " + std::to_string(i + 1) +
                             " reached the chart boundary |x| >= pi");
  StackedVec3 omega = x.size() >= kParallelAgentThreshold ? control_input_parallel(x, g, mode)
                                                          : control_input(x, g, mode);
  for (std::size_t i = 0; i < x.size(); ++i) omega[i] = apply_transition(x[i], omega[i]);
  return omega;
}

}  // namespace attsync
