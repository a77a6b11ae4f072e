#pragma once

// Test-only reference computations. Nothing here calls into the code paths it
// is used to check.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "attsync/graph.hpp"

namespace oracle {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat3L = Eigen::Matrix<long double, 3, 3>;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
}

/// Uniform direction times a uniform radius in [0, max_norm].
inline Vec3 random_vec(std::mt19937_64& rng, double max_norm) {
  Vec3 d;
  do {
    d = {uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1)};
  } while (d.squaredNorm() > 1.0 || d.squaredNorm() < 1e-6);
  return d.normalized() * uniform(rng, 0.0, max_norm);
}

inline Mat3L skew(const Vec3& v) {
  Mat3L m;
  m << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return m;
}

/// Matrix exponential by its power series in long double.
inline Mat3 expm_series(const Vec3& v) {
  const Mat3L a = skew(v);
  Mat3L term = Mat3L::Identity();
  Mat3L sum = Mat3L::Identity();
  for (int k = 1; k < 80; ++k) {
    term = term * a / static_cast<long double>(k);
    sum += term;
  }
  return sum.cast<double>();
}

/// (1/sqrt 2) |log R|_F with log R = theta / (2 sin theta) (R - R^T) and
/// theta = arccos((tr R - 1) / 2); valid away from 0 and pi.
inline double frobenius_distance_from_identity(const Mat3& r) {
  const long double c = std::clamp<long double>((r.trace() - 1.0L) / 2.0L, -1.0L, 1.0L);
  const long double theta = std::acos(c);
  if (theta == 0.0L) return 0.0;
  const Mat3L log_r = theta / (2.0L * std::sin(theta)) * (r - r.transpose()).cast<long double>();
  return static_cast<double>(std::sqrt(log_r.cwiseAbs2().sum()) / std::sqrt(2.0L));
}

/// sinc(t)/sinc^2(t/2) straight from the definition sinc(a) = sin(a)/a.
inline double sinc_ratio_direct(double t) {
  auto sinc = [](long double a) { return a == 0.0L ? 1.0L : std::sin(a) / a; };
  const long double h = sinc(t / 2.0L);
  return static_cast<double>(sinc(t) / (h * h));
}

/// L_x in the I + hat(x)/2 + (1 - r)(hat(x)/|x|)^2 form.
inline Mat3 transition_hat_form(const Vec3& x) {
  const double t = x.norm();
  const Mat3L k = skew(x);
  const long double r = sinc_ratio_direct(t);
  const Mat3L l = Mat3L::Identity() + k / 2.0L + (1.0L - r) * (k * k) / static_cast<long double>(t * t);
  return l.cast<double>();
}

/// Reachability by repeated boolean multiplication of (A + I).
inline bool connected_by_matrix_powers(const attsync::Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXi a = Eigen::MatrixXi::Identity(n, n);
  for (const auto& [i, j] : g.edges()) {
    a(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) = 1;
    a(static_cast<Eigen::Index>(j - 1), static_cast<Eigen::Index>(i - 1)) = 1;
  }
  Eigen::MatrixXi reach = a;
  for (Eigen::Index k = 0; k < n; ++k) reach = (reach * a).unaryExpr([](int v) { return v > 0 ? 1 : 0; });
  return (reach.array() > 0).all();
}

/// Random graph on n nodes with the given edge probability and random edge
/// orientations.
inline attsync::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<attsync::Edge> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (uniform(rng, 0, 1) < p) edges.push_back(uniform(rng, 0, 1) < 0.5 ? attsync::Edge{i, j} : attsync::Edge{j, i});
  return attsync::Graph::from_edges(n, std::move(edges));
}

inline attsync::Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  for (;;) {
    auto g = random_graph(rng, n, p);
    if (connected_by_matrix_powers(g)) return g;
  }
}

}  // namespace oracle
