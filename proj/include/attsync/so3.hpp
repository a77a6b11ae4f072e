#pragma once

#include <Eigen/Dense>

namespace attsync {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

namespace tol {
/// Orthonormality / skew-symmetry / determinant checks.
inline constexpr double kStructural = 1e-9;
/// Switch to Taylor expansions of sinc-type coefficients below this angle.
inline constexpr double kSmallAngle = 1e-4;
/// Below pi - kNearPi the logarithm reads the axis off the antisymmetric part;
/// above it, off the symmetric part.
inline constexpr double kNearPi = 1e-3;
}  // namespace tol

/// A 3x3 rotation matrix. Construction checks R R^T = I and det R = 1 to
/// tol::kStructural and throws DomainError otherwise.
class Rotation {
 public:
  Rotation() : m_(Mat3::Identity()) {}
  explicit Rotation(const Mat3& m);

  static Rotation identity() { return Rotation(); }

  const Mat3& matrix() const { return m_; }
  Rotation inverse() const;
  Rotation operator*(const Rotation& other) const;

  /// Frobenius norm of R R^T - I.
  static double orthonormality_error(const Mat3& m);

 private:
  struct Unchecked {};
  Rotation(const Mat3& m, Unchecked) : m_(m) {}
  friend Rotation exp_so3(const Vec3& v);

  Mat3 m_;
};

/// Axis scaled by angle, with ||v|| <= pi (+ tol::kStructural).
class AxisAngle {
 public:
  AxisAngle() : v_(Vec3::Zero()) {}
  explicit AxisAngle(const Vec3& v);

  const Vec3& vector() const { return v_; }
  double angle() const { return v_.norm(); }

 private:
  Vec3 v_;
};

Mat3 hat(const Vec3& v);

/// Inverse of hat. Throws DomainError when M is not skew-symmetric.
Vec3 vee(const Mat3& m);

/// Rodrigues' formula. Any finite v is accepted (the map is 2*pi periodic
/// along each axis).
Rotation exp_so3(const Vec3& v);

/// Principal logarithm; the result has norm in [0, pi]. log(I) = 0. At an
/// exact half turn the sign is chosen so the first nonzero component is
/// positive.
AxisAngle log_so3(const Rotation& r);

/// Riemannian distance ||log(R1^T R2)||, in radians.
double geodesic_distance(const Rotation& r1, const Rotation& r2);

/// sinc(theta) / sinc^2(theta/2) = (theta/2) cot(theta/2) on [0, pi].
/// Decreasing from 1 at theta = 0 to 0 at theta = pi.
double sinc_ratio(double theta);

}  // namespace attsync
