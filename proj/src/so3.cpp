#include "attsync/so3.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/LU>

#include "attsync/errors.hpp"

namespace attsync {

namespace {

constexpr double kPi = std::numbers::pi;
// Below this |sin(theta)| the antisymmetric part carries no usable sign.
constexpr double kHalfTurnSin = 1e-12;

bool all_finite(const Mat3& m) { return m.allFinite(); }

}  // namespace

Rotation::Rotation(const Mat3& m) : m_(m) {
  if (!all_finite(m)) throw DomainError("rotation: non-finite entries");
  if (orthonormality_error(m) > tol::kStructural)
    throw DomainError("rotation: R R^T deviates from identity by " +
                      std::to_string(orthonormality_error(m)));
  if (std::abs(m.determinant() - 1.0) > tol::kStructural)
    throw DomainError("rotation: det R = " + std::to_string(m.determinant()));
}

double Rotation::orthonormality_error(const Mat3& m) {
  return (m * m.transpose() - Mat3::Identity()).norm();
}

Rotation Rotation::inverse() const { return Rotation(Mat3(m_.transpose()), Unchecked{}); }

Rotation Rotation::operator*(const Rotation& other) const {
  return Rotation(Mat3(m_ * other.m_));
}

AxisAngle::AxisAngle(const Vec3& v) : v_(v) {
  if (!v.allFinite()) throw DomainError("axis-angle: non-finite component");
  if (v.norm() > kPi + tol::kStructural)
    throw DomainError("axis-angle: norm " + std::to_string(v.norm()) + " exceeds pi");
}

Mat3 hat(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(),
       v.z(), 0.0, -v.x(),
       -v.y(), v.x(), 0.0;
  return m;
}

Vec3 vee(const Mat3& m) {
  if ((m + m.transpose()).norm() > tol::kStructural)
    throw DomainError("vee: matrix is not skew-symmetric");
  return {m(2, 1), m(0, 2), m(1, 0)};
}

Rotation exp_so3(const Vec3& v) {
  const double theta = v.norm();
  const double t2 = theta * theta;
  double a;  // sin(theta)/theta
  double b;  // (1 - cos(theta))/theta^2
  if (theta < tol::kSmallAngle) {
    a = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / t2;
  }
  const Mat3 k = hat(v);
  return Rotation(Mat3(Mat3::Identity() + a * k + b * k * k), Rotation::Unchecked{});
}

AxisAngle log_so3(const Rotation& r) {
  const Mat3& m = r.matrix();
  const double tr = m.trace();
  if (tr < -1.0 - tol::kStructural || tr > 3.0 + tol::kStructural)
    throw DomainError("log_so3: trace " + std::to_string(tr) + " outside [-1, 3]");

  // w = sin(theta) * axis
  const Vec3 w = 0.5 * Vec3(m(2, 1) - m(1, 2), m(0, 2) - m(2, 0), m(1, 0) - m(0, 1));
  const double c = std::clamp(0.5 * (tr - 1.0), -1.0, 1.0);
  const double s = w.norm();
  const double theta = std::atan2(s, c);

  if (theta < tol::kSmallAngle) {
    // theta / sin(theta)
    const double t2 = theta * theta;
    return AxisAngle(Vec3((1.0 + t2 / 6.0 + 7.0 * t2 * t2 / 360.0) * w));
  }
  if (theta <= kPi - tol::kNearPi) return AxisAngle(Vec3((theta / s) * w));

  // Near a half turn: (R + R^T)/2 = cos(theta) I + (1 - cos(theta)) n n^T.
  const Mat3 outer = (0.5 * (m + m.transpose()) - c * Mat3::Identity()) / (1.0 - c);
  Eigen::Index k = 0;
  outer.diagonal().maxCoeff(&k);
  Vec3 axis = outer.col(k).normalized();
  if (s > kHalfTurnSin) {
    if (axis.dot(w) < 0.0) axis = -axis;
  } else {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(axis[i]) > tol::kStructural) {
        if (axis[i] < 0.0) axis = -axis;
        break;
      }
    }
  }
  return AxisAngle(Vec3(theta * axis));
}

double geodesic_distance(const Rotation& r1, const Rotation& r2) {
  return log_so3(r1.inverse() * r2).angle();
}

double sinc_ratio(double theta) {
  if (!(theta >= 0.0) || theta > kPi + tol::kStructural)
    throw DomainError("sinc_ratio: angle " + std::to_string(theta) + " outside [0, pi]");
  if (theta < tol::kSmallAngle) {
    const double t2 = theta * theta;
    return 1.0 - t2 / 12.0 - t2 * t2 / 720.0;
  }
  if (theta >= kPi) return 0.0;
  const double half = 0.5 * theta;
  return std::max(0.0, half * std::cos(half) / std::sin(half));
}

}  // namespace attsync
