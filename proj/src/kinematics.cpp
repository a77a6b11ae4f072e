#include "attsync/kinematics.hpp"

#include <numbers>
#include <string>

#include "attsync/errors.hpp"

namespace attsync {

namespace {

Mat3 symmetric_of(const Vec3& x) {
  const double theta = x.norm();
  if (theta < tol::kSmallAngle) return Mat3::Identity();
  const double r = sinc_ratio(theta);
  return r * Mat3::Identity() + (1.0 - r) * (x * x.transpose()) / (theta * theta);
}

}  // namespace

TransitionMatrix transition_matrix(const AxisAngle& x) {
  return TransitionMatrix(Mat3(symmetric_of(x.vector()) + 0.5 * hat(x.vector())), x);
}

Mat3 symmetric_part(const AxisAngle& x) { return symmetric_of(x.vector()); }

double lambda_min(const AxisAngle& x) {
  if (x.angle() >= std::numbers::pi)
    throw DomainError("lambda_min: |x| = " + std::to_string(x.angle()) + " is at the chart boundary");
  return sinc_ratio(x.angle());
}

Vec3 apply_transition(const Vec3& x, const Vec3& w) {
  const double theta = x.norm();
  const Vec3 skew = 0.5 * x.cross(w);
  if (theta < tol::kSmallAngle) return w + skew;
  const double r = sinc_ratio(theta);
  return r * w + ((1.0 - r) * x.dot(w) / (theta * theta)) * x + skew;
}

StackedVec3 state_derivative(std::span<const Vec3> x, std::span<const Vec3> omega) {
  if (x.size() != omega.size())
    throw ContractViolation("state_derivative: " + std::to_string(x.size()) + " states but " +
                            std::to_string(omega.size()) + " velocities");
  StackedVec3 out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].norm() > std::numbers::pi + tol::kStructural)
      throw DomainError("state_derivative: agent " + std::to_string(i + 1) + " outside the chart");
    out[i] = apply_transition(x[i], omega[i]);
  }
  return out;
}

}  // namespace attsync
