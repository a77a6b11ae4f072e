#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>

#include "doctest.h"

#include "attsync/errors.hpp"
#include "attsync/kinematics.hpp"
#include "oracles.hpp"

using namespace attsync;
constexpr double kPi = std::numbers::pi;

TEST_CASE("transition matrix examples") {
  CHECK(transition_matrix(AxisAngle()).matrix() == Mat3::Identity());

  Mat3 expected;
  expected << 1, 0, 0, 0, kPi / 4, -kPi / 4, 0, kPi / 4, kPi / 4;
  const Mat3 l = transition_matrix(AxisAngle(Vec3(kPi / 2, 0, 0))).matrix();
  CHECK((l - expected).norm() <= 1e-15);
  CHECK((oracle::transition_hat_form(Vec3(kPi / 2, 0, 0)) - expected).norm() <= 1e-15);
}

TEST_CASE("symmetric part and lambda_min examples") {
  CHECK(symmetric_part(AxisAngle()) == Mat3::Identity());
  CHECK((symmetric_part(AxisAngle(Vec3(kPi, 0, 0))) - Vec3(1, 0, 0).asDiagonal().toDenseMatrix()).norm() <= 1e-15);
  CHECK((symmetric_part(AxisAngle(Vec3(kPi / 2, 0, 0))) -
         Vec3(1, kPi / 4, kPi / 4).asDiagonal().toDenseMatrix())
            .norm() <= 1e-15);

  CHECK(lambda_min(AxisAngle()) == 1.0);
  CHECK(lambda_min(AxisAngle(Vec3(kPi / 2, 0, 0))) == doctest::Approx(kPi / 4).epsilon(1e-15));
  const AxisAngle unit(Vec3(0.6, 0, 0.8));
  CHECK(lambda_min(unit) == doctest::Approx(0.9152438608562260).epsilon(1e-14));
  Eigen::SelfAdjointEigenSolver<Mat3> eig(symmetric_part(unit));
  CHECK(eig.eigenvalues().minCoeff() == doctest::Approx(0.9152438608562260).epsilon(1e-14));
  CHECK_THROWS_AS(lambda_min(AxisAngle(Vec3(0, kPi, 0))), DomainError);
}

TEST_CASE("state derivative examples and errors") {
  const StackedVec3 zero(3, Vec3::Zero());
  const StackedVec3 omega{{1, 2, 3}, {-1, 0, 4}, {0.5, 0.5, 0.5}};
  const auto d = state_derivative(zero, omega);
  for (std::size_t i = 0; i < 3; ++i) CHECK(d[i] == omega[i]);

  const StackedVec3 x{{0.3, -1.0, 2.0}, {0.1, 0.1, 0.1}, {-2.5, 0, 0}};
  for (const auto& v : state_derivative(x, StackedVec3(3, Vec3::Zero()))) CHECK(v == Vec3::Zero());

  const StackedVec3 one{{kPi / 2, 0, 0}};
  const auto d1 = state_derivative(one, StackedVec3{{0, 1, 0}});
  CHECK((d1[0] - Vec3(0, kPi / 4, kPi / 4)).norm() <= 1e-15);

  CHECK_THROWS_AS(state_derivative(x, StackedVec3(2)), ContractViolation);
  CHECK_THROWS_AS(state_derivative(StackedVec3{{4.0, 0, 0}}, StackedVec3{{1, 0, 0}}), DomainError);
}

TEST_CASE("L_x fixes x from both sides") {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 10000; ++k) {
    const Vec3 x = oracle::random_vec(rng, kPi - 0.01);
    const Mat3 l = transition_matrix(AxisAngle(x)).matrix();
    const double tol = 1e-12 * std::max(1.0, x.norm());
    REQUIRE((x.transpose() * l - x.transpose()).norm() <= tol);
    REQUIRE((l * x - x).norm() <= tol);
  }
}

TEST_CASE("spectrum of the symmetric part is {r, r, 1}") {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 2000; ++k) {
    const Vec3 x = oracle::random_vec(rng, kPi - 0.01);
    Eigen::SelfAdjointEigenSolver<Mat3> eig(symmetric_part(AxisAngle(x)));
    Vec3 ev = eig.eigenvalues();
    std::sort(ev.data(), ev.data() + 3);
    const double r = oracle::sinc_ratio_direct(x.norm());
    REQUIRE(std::abs(ev[0] - r) <= 1e-9);
    REQUIRE(std::abs(ev[1] - r) <= 1e-9);
    REQUIRE(std::abs(ev[2] - 1.0) <= 1e-9);
  }
}

TEST_CASE("quadratic form of L_x is bounded below by lambda_min") {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 2000; ++k) {
    const AxisAngle x(oracle::random_vec(rng, kPi - 0.01));
    const Vec3 z = oracle::random_vec(rng, 3.0);
    const auto l = transition_matrix(x);
    const double q = z.dot(l.matrix() * z);
    CHECK(std::abs(q - z.dot(l.symmetric() * z)) <= 1e-12);
    CHECK(q >= lambda_min(x) * z.squaredNorm() - 1e-12);
  }
}

TEST_CASE("both algebraic forms of L_x agree; apply_transition matches the matrix") {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 2000; ++k) {
    const Vec3 x = oracle::random_vec(rng, kPi - 0.01);
    if (x.norm() < 1e-3) continue;
    const Mat3 l = transition_matrix(AxisAngle(x)).matrix();
    CHECK((l - oracle::transition_hat_form(x)).norm() <= 1e-12);
    const Vec3 w = oracle::random_vec(rng, 2.0);
    CHECK((apply_transition(x, w) - l * w).norm() <= 1e-12);
  }
}

TEST_CASE("L_x is the first-order map from body rate to axis-angle rate") {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 200; ++k) {
    const Vec3 x = oracle::random_vec(rng, kPi - 0.3);
    const Vec3 w = oracle::random_vec(rng, 1.0);
    const Mat3 l = transition_matrix(AxisAngle(x)).matrix();
    double worst = 0.0;
    for (double dt : {1e-2, 1e-3, 1e-4}) {
      const Vec3 next = log_so3(exp_so3(x) * exp_so3(dt * w)).vector();
      const double err = (next - (x + dt * l * w)).norm();
      worst = std::max(worst, err / (dt * dt));
    }
    CHECK(worst < 50.0);
  }
}
