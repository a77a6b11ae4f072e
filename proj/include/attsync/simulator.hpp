#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "attsync/controller.hpp"
#include "attsync/graph.hpp"

namespace attsync {

struct SimConfig {
  Graph graph;
  NetworkState initial_state;
  double dt = 1e-3;
  double t_max = 20.0;
  SignMode mode = SignMode::deadband(1e-3);
  double consensus_tolerance = 1e-2;
  std::size_t record_stride = 1;

  /// Throws ValidationError naming the first bad field.
  void validate() const;
};

enum class EventKind { ConsensusReached, SingularityCrossed, DomainError };

std::string to_string(EventKind kind);

struct Event {
  double time = 0.0;
  EventKind kind = EventKind::ConsensusReached;
};

/// Recorded samples plus monitors accumulated over every integration step
/// (not only the recorded ones).
struct TrajectoryRecord {
  double dt = 0.0;
  std::size_t record_stride = 1;
  std::size_t steps = 0;  // integration steps actually taken

  std::vector<double> times;
  std::vector<StackedVec3> states;
  std::vector<double> v1;
  std::vector<double> v2;
  std::vector<double> max_norm;
  std::vector<double> disagreement;
  std::vector<Event> events;

  // Per-step monitors.
  double max_v2_step_increase = 0.0;
  double max_v1_step_increase_outside_consensus = 0.0;
  double peak_sum_sq_norm = 0.0;
  double min_lambda = 1.0;
  std::optional<double> max_disagreement_after_consensus;

  std::size_t size() const { return times.size(); }
  std::optional<double> first_event(EventKind kind) const;
};

struct MonitorReport {
  std::optional<double> consensus_time;
  double final_disagreement = 0.0;
  double v2_max_increase_per_step = 0.0;
  double invariance_bound = 0.0;
  bool invariance_violated = false;
  double min_lambda_along_trajectory = 1.0;
  /// sinc_ratio(min(pi, sqrt(sum |x_i(0)|^2))): what an invariant ball
  /// around the initial state would guarantee in advance.
  double lambda_a_priori_bound = 1.0;
  std::optional<double> v1_max_slope_outside_consensus;
  std::optional<double> singularity_time;
  std::optional<double> max_disagreement_after_consensus;
  std::size_t agent_count = 0;
};

/// V2 = 1/2 sum |x_i|^2.
double lyapunov_v2(std::span<const Vec3> x);
/// V1 = sum over edges of |x_i - x_j|_1.
double lyapunov_v1(std::span<const Vec3> x, const Graph& g);
/// Max over pairs of |x_i - x_j|_inf; zero iff x is in the consensus space.
double disagreement(std::span<const Vec3> x);
double max_norm(std::span<const Vec3> x);

/// Explicit Euler x <- x + dt f(x). Stops at t_max, at the first step where
/// max |x_i| >= pi (that sample is recorded and a SingularityCrossed event
/// logged), or at a non-finite state (DomainError event).
TrajectoryRecord integrate(const SimConfig& config);

/// True iff 2 V2 < C + 1e-6 * steps * dt at every recorded sample and at the
/// per-step peak.
bool check_invariance(const TrajectoryRecord& traj, double bound);

/// Largest windowed slope (V1(k + w) - V1(k)) / (t(k + w) - t(k)) over the
/// samples up to the first consensus event. Empty when fewer than window + 1
/// such samples exist.
std::optional<double> estimate_v1_slope(const TrajectoryRecord& traj, std::size_t window);

/// Window, in seconds, used by build_report for the V1 slope.
inline constexpr double kSlopeWindowSeconds = 0.1;

MonitorReport build_report(const TrajectoryRecord& traj, const SimConfig& config, double bound);

/// Slack added to the -lambda/n bound on the windowed V1 slope.
inline constexpr double kRateSlack = 0.1;

/// V2 never rose by more than 1e-6 * dt in a single step.
bool v2_nonincreasing(const MonitorReport& report, double dt);
/// Windowed V1 slope <= -min_lambda / n + kRateSlack (vacuous when no slope
/// could be estimated).
bool rate_bound_holds(const MonitorReport& report);
/// Disagreement stayed <= 2 * tolerance once consensus was first reached.
bool consensus_persists(const MonitorReport& report, double tolerance);

/// integrate + build_report for each config, runs distributed over OpenMP
/// threads. Output order follows input order.
std::vector<MonitorReport> simulate_batch(std::span<const SimConfig> configs, double bound);

/// Serial reference for simulate_batch.
std::vector<MonitorReport> simulate_batch_serial(std::span<const SimConfig> configs, double bound);

}  // namespace attsync
