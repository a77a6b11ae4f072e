#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"

#include "attsync/controller.hpp"
#include "attsync/errors.hpp"
#include "oracles.hpp"

using namespace attsync;
constexpr double kPi = std::numbers::pi;

namespace {

const SignMode kModes[] = {SignMode::exact(), SignMode::deadband(1e-3), SignMode::smooth(1e-3),
                           SignMode::deadband(0.2), SignMode::smooth(0.5)};

StackedVec3 random_state(std::mt19937_64& rng, std::size_t n, double max_norm) {
  StackedVec3 x(n);
  for (auto& xi : x) xi = oracle::random_vec(rng, max_norm);
  return x;
}

double max_diff(const StackedVec3& a, const StackedVec3& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, (a[i] - b[i]).cwiseAbs().maxCoeff());
  return d;
}

}  // namespace

TEST_CASE("sign_value") {
  CHECK(sign_value(2.5, SignMode::exact()) == 1.0);
  CHECK(sign_value(0.0, SignMode::exact()) == 0.0);
  CHECK(sign_value(-3.0, SignMode::exact()) == -1.0);
  CHECK(sign_value(-1e-6, SignMode::deadband(1e-4)) == 0.0);
  CHECK(sign_value(1e-4, SignMode::deadband(1e-4)) == 0.0);
  CHECK(sign_value(2e-4, SignMode::deadband(1e-4)) == 1.0);
  CHECK(sign_value(1e-3, SignMode::smooth(1e-3)) == doctest::Approx(std::tanh(1.0)));
  CHECK_THROWS_AS(SignMode::deadband(0.0), ContractViolation);
  CHECK_THROWS_AS(SignMode::smooth(-1.0), ContractViolation);

  std::mt19937_64 rng(41);
  for (const auto& mode : kModes)
    for (int k = 0; k < 200; ++k) {
      const double a = oracle::uniform(rng, -2.0, 2.0);
      const double s = sign_value(a, mode);
      CHECK(s >= -1.0);
      CHECK(s <= 1.0);
      CHECK(sign_value(-a, mode) == -s);
    }
}

TEST_CASE("NetworkState rejects states outside the chart") {
  CHECK_NOTHROW(NetworkState({{0, 0, kPi}}));
  CHECK_THROWS_AS(NetworkState({{0, 0, 3.2}}), DomainError);
  CHECK_THROWS_AS(NetworkState({{0, NAN, 0}}), DomainError);
}

TEST_CASE("control input examples") {
  const Graph k2 = Graph::from_edges(2, {{1, 2}});
  const StackedVec3 x{{1, 0, 0}, {0, 0, 0}};
  const auto w = control_input(x, k2, SignMode::exact());
  CHECK(w[0] == Vec3(-1, 0, 0));
  CHECK(w[1] == Vec3(1, 0, 0));

  const Graph fig = reference_topology();
  StackedVec3 y(5, Vec3::Zero());
  y[1] = {1, 1, 1};
  const auto u = control_input(y, fig, SignMode::exact());
  CHECK(u[1] == Vec3(-3, -3, -3));
  CHECK(u[0] == Vec3(1, 1, 1));
  CHECK(u[2] == Vec3(1, 1, 1));
  CHECK(u[3] == Vec3(1, 1, 1));
  CHECK(u[4] == Vec3(0, 0, 0));

  const StackedVec3 agreed(5, Vec3(0.4, -1.1, 0.7));
  for (const auto& mode : kModes)
    for (const auto& wi : control_input(agreed, fig, mode)) CHECK(wi == Vec3::Zero());

  CHECK_THROWS_AS(control_input(x, fig, SignMode::exact()), ContractViolation);
}

TEST_CASE("closed loop examples") {
  const Graph k2 = Graph::from_edges(2, {{1, 2}});
  const auto f = closed_loop_rhs(StackedVec3{{1, 0, 0}, {0, 0, 0}}, k2, SignMode::exact());
  CHECK((f[0] - Vec3(-1, 0, 0)).norm() <= 1e-15);
  CHECK((f[1] - Vec3(1, 0, 0)).norm() <= 1e-15);

  for (const auto& fi : closed_loop_rhs(StackedVec3(5, Vec3::Zero()), reference_topology(), SignMode::exact()))
    CHECK(fi == Vec3::Zero());
  for (const auto& fi : closed_loop_rhs(StackedVec3(5, Vec3(1, 2, -0.5)), reference_topology(), SignMode::exact()))
    CHECK(fi == Vec3::Zero());

  CHECK_THROWS_AS(closed_loop_rhs(StackedVec3{{kPi, 0, 0}, {0, 0, 0}}, k2, SignMode::exact()), SingularityError);
}

TEST_CASE("neighbor-sum, incidence and parallel kernels agree under any orientation") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(2 + rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    // same undirected graph, every edge flipped at random
    std::vector<Edge> flipped = g.edges();
    for (auto& e : flipped)
      if (rng() & 1) std::swap(e.first, e.second);
    const Graph h = Graph::from_edges(n, flipped);
    const StackedVec3 x = random_state(rng, n, kPi - 0.01);
    for (const auto& mode : kModes) {
      const auto ref = control_input(x, g, mode);
      CHECK(max_diff(ref, control_input_incidence(x, g, mode)) <= 1e-12);
      CHECK(max_diff(ref, control_input_incidence(x, h, mode)) <= 1e-12);
      CHECK(max_diff(ref, control_input_parallel(x, g, mode)) == 0.0);
    }
  }
}

TEST_CASE("control law symmetries and bounds") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(2 + rng() % 7);
    const Graph g = oracle::random_graph(rng, n, 0.5);
    const StackedVec3 x = random_state(rng, n, 1.5);
    const SignMode mode = kModes[trial % 5];
    const auto w = control_input(x, g, mode);

    // relabel: node i of g becomes perm[i] of h
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), NodeId{1});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) edges.emplace_back(perm[a - 1], perm[b - 1]);
    const Graph h = Graph::from_edges(n, edges);
    StackedVec3 xp(n);
    for (std::size_t i = 0; i < n; ++i) xp[perm[i] - 1] = x[i];
    const auto wp = control_input(xp, h, mode);
    // sums are reordered, so tanh terms may differ in the last bits
    for (std::size_t i = 0; i < n; ++i) {
      if (mode.kind == SignMode::Kind::Smooth)
        CHECK((wp[perm[i] - 1] - w[i]).lpNorm<Eigen::Infinity>() <= 1e-12);
      else
        CHECK(wp[perm[i] - 1] == w[i]);
    }

    // translation by a common vector only matters through rounding
    const Vec3 c = oracle::random_vec(rng, 1.0);
    StackedVec3 shifted = x;
    for (auto& xi : shifted) xi += c;
    if (mode.kind == SignMode::Kind::Smooth)
      CHECK(max_diff(control_input(shifted, g, mode), w) <= 1e-9);
    else
      CHECK(max_diff(control_input(shifted, g, mode), w) == 0.0);

    // odd symmetry
    StackedVec3 neg = x;
    for (auto& xi : neg) xi = -xi;
    const auto wn = control_input(neg, g, mode);
    for (std::size_t i = 0; i < n; ++i) CHECK(wn[i] == -w[i]);

    // |omega_i|_inf <= deg(i); |f_i| <= deg(i) sqrt(3) |L_{x_i}|
    const auto f = closed_loop_rhs(x, g, mode);
    for (std::size_t i = 0; i < n; ++i) {
      const double deg = static_cast<double>(g.degree(i + 1));
      CHECK(w[i].cwiseAbs().maxCoeff() <= deg);
      const double l_norm = transition_matrix(AxisAngle(x[i])).matrix().operatorNorm();
      CHECK(f[i].norm() <= deg * std::sqrt(3.0) * l_norm + 1e-12);
    }
  }
}

TEST_CASE("closed_loop_rhs switches to the parallel kernel without changing values") {
  std::mt19937_64 rng(44);
  const std::size_t n = kParallelAgentThreshold + 10;
  std::vector<Edge> ring;
  for (std::size_t i = 1; i <= n; ++i) ring.emplace_back(i, i % n + 1);
  const Graph g = Graph::from_edges(n, ring);
  const StackedVec3 x = random_state(rng, n, 2.0);
  const auto omega = control_input(x, g, SignMode::exact());
  const auto f = closed_loop_rhs(x, g, SignMode::exact());
  for (std::size_t i = 0; i < n; ++i) REQUIRE(f[i] == apply_transition(x[i], omega[i]));
}
