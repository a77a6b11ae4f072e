#include "attsync/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>

#include "attsync/errors.hpp"

namespace attsync {

namespace {

constexpr double kPi = std::numbers::pi;
// Per-step integration error budget, scaled by dt.
constexpr double kStepDrift = 1e-6;

double lambda_at(std::span<const Vec3> x) {
  double lam = 1.0;
  for (const auto& xi : x) lam = std::min(lam, sinc_ratio(std::min(xi.norm(), kPi)));
  return lam;
}

}  // namespace

void SimConfig::validate() const {
  if (graph.node_count() == 0) throw ValidationError("graph", "needs at least one node");
  if (initial_state.size() != graph.node_count())
    throw ValidationError("initial_state", "has " + std::to_string(initial_state.size()) +
                                               " agents, graph has " +
                                               std::to_string(graph.node_count()));
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ValidationError("dt", "must be > 0");
  if (dt > 1e-2) throw ValidationError("dt", "must be <= 1e-2");
  if (!std::isfinite(t_max) || t_max < dt) throw ValidationError("t_max", "must be >= dt");
  if (!(consensus_tolerance >= 0.0) || !std::isfinite(consensus_tolerance))
    throw ValidationError("consensus_tolerance", "must be >= 0");
  if (record_stride == 0) throw ValidationError("record_stride", "must be positive");
  if (mode.kind != SignMode::Kind::Exact && !(mode.epsilon > 0.0))
    throw ValidationError("mode.epsilon", "must be > 0");
}

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::ConsensusReached: return "ConsensusReached";
    case EventKind::SingularityCrossed: return "SingularityCrossed";
    case EventKind::DomainError: return "DomainError";
  }
  return "Unknown";
}

std::optional<double> TrajectoryRecord::first_event(EventKind kind) const {
  for (const auto& e : events)
    if (e.kind == kind) return e.time;
  return std::nullopt;
}

double lyapunov_v2(std::span<const Vec3> x) {
  double s = 0.0;
  for (const auto& xi : x) s += xi.squaredNorm();
  return 0.5 * s;
}

double lyapunov_v1(std::span<const Vec3> x, const Graph& g) {
  if (x.size() != g.node_count())
    throw ContractViolation("lyapunov_v1: state does not match graph");
  double s = 0.0;
  for (const auto& [a, b] : g.edges()) s += (x[a - 1] - x[b - 1]).lpNorm<1>();
  return s;
}

double disagreement(std::span<const Vec3> x) {
  if (x.empty()) return 0.0;
  // max_{i,j} |x_i - x_j|_inf = max over coordinates of (max - min)
  Vec3 lo = x[0];
  Vec3 hi = x[0];
  for (const auto& xi : x) {
    lo = lo.cwiseMin(xi);
    hi = hi.cwiseMax(xi);
  }
  return (hi - lo).maxCoeff();
}

double max_norm(std::span<const Vec3> x) {
  double m = 0.0;
  for (const auto& xi : x) m = std::max(m, xi.norm());
  return m;
}

TrajectoryRecord integrate(const SimConfig& config) {
  config.validate();
  const Graph& g = config.graph;
  const double dt = config.dt;
  const auto total_steps = static_cast<std::size_t>(std::floor(config.t_max / dt + 1e-9));

  TrajectoryRecord rec;
  rec.dt = dt;
  rec.record_stride = config.record_stride;

  StackedVec3 x = config.initial_state.agents();
  double v1 = lyapunov_v1(x, g);
  double v2 = lyapunov_v2(x);
  double dis = disagreement(x);
  double norm = max_norm(x);
  bool consensus = false;

  auto record = [&](double t) {
    rec.times.push_back(t);
    rec.states.push_back(x);
    rec.v1.push_back(v1);
    rec.v2.push_back(v2);
    rec.max_norm.push_back(norm);
    rec.disagreement.push_back(dis);
  };
  auto note_consensus = [&](double t) {
    if (consensus) {
      rec.max_disagreement_after_consensus =
          std::max(*rec.max_disagreement_after_consensus, dis);
    } else if (dis <= config.consensus_tolerance) {
      consensus = true;
      rec.events.push_back({t, EventKind::ConsensusReached});
      rec.max_disagreement_after_consensus = dis;
    }
  };

  rec.peak_sum_sq_norm = 2.0 * v2;
  rec.min_lambda = lambda_at(x);
  record(0.0);
  note_consensus(0.0);
  if (norm >= kPi) {
    rec.events.push_back({0.0, EventKind::SingularityCrossed});
    return rec;
  }

  for (std::size_t k = 1; k <= total_steps; ++k) {
    const StackedVec3 f = closed_loop_rhs(x, g, config.mode);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += dt * f[i];
    rec.steps = k;
    const double t = static_cast<double>(k) * dt;

    bool finite = true;
    for (const auto& xi : x) finite = finite && xi.allFinite();
    if (!finite) {
      rec.events.push_back({t, EventKind::DomainError});
      break;
    }

    const double v1_next = lyapunov_v1(x, g);
    const double v2_next = lyapunov_v2(x);
    rec.max_v2_step_increase = std::max(rec.max_v2_step_increase, v2_next - v2);
    if (dis > config.consensus_tolerance)
      rec.max_v1_step_increase_outside_consensus =
          std::max(rec.max_v1_step_increase_outside_consensus, v1_next - v1);
    v1 = v1_next;
    v2 = v2_next;
    dis = disagreement(x);
    norm = max_norm(x);
    rec.peak_sum_sq_norm = std::max(rec.peak_sum_sq_norm, 2.0 * v2);
    rec.min_lambda = std::min(rec.min_lambda, lambda_at(x));
    note_consensus(t);

    if (norm >= kPi) {
      record(t);
      rec.events.push_back({t, EventKind::SingularityCrossed});
      break;
    }
    if (k % config.record_stride == 0 || k == total_steps) record(t);
  }
  return rec;
}

bool check_invariance(const TrajectoryRecord& traj, double bound) {
  const double allowance = kStepDrift * static_cast<double>(traj.steps) * traj.dt;
  const double limit = bound + allowance;
  for (double v : traj.v2)
    if (!(2.0 * v < limit)) return false;
  return traj.peak_sum_sq_norm < limit;
}

std::optional<double> estimate_v1_slope(const TrajectoryRecord& traj, std::size_t window) {
  if (window == 0) throw ContractViolation("estimate_v1_slope: window must be positive");
  const auto consensus = traj.first_event(EventKind::ConsensusReached);
  std::size_t end = traj.size();
  if (consensus) {
    end = 0;
    while (end < traj.size() && traj.times[end] <= *consensus) ++end;
  }
  if (end < window + 1) return std::nullopt;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k + window < end; ++k) {
    const double slope =
        (traj.v1[k + window] - traj.v1[k]) / (traj.times[k + window] - traj.times[k]);
    worst = std::max(worst, slope);
  }
  return worst;
}

MonitorReport build_report(const TrajectoryRecord& traj, const SimConfig& config, double bound) {
  MonitorReport rep;
  rep.agent_count = config.graph.node_count();
  rep.consensus_time = traj.first_event(EventKind::ConsensusReached);
  rep.singularity_time = traj.first_event(EventKind::SingularityCrossed);
  rep.final_disagreement = traj.disagreement.empty() ? 0.0 : traj.disagreement.back();
  rep.v2_max_increase_per_step = traj.max_v2_step_increase;
  rep.invariance_bound = bound;
  rep.invariance_violated = !check_invariance(traj, bound);
  rep.min_lambda_along_trajectory = traj.min_lambda;
  const double initial_radius = std::sqrt(2.0 * lyapunov_v2(config.initial_state.view()));
  rep.lambda_a_priori_bound = sinc_ratio(std::min(initial_radius, kPi));
  const double sample_dt = config.dt * static_cast<double>(config.record_stride);
  const auto window =
      static_cast<std::size_t>(std::max(1.0, std::round(kSlopeWindowSeconds / sample_dt)));
  rep.v1_max_slope_outside_consensus = estimate_v1_slope(traj, window);
  rep.max_disagreement_after_consensus = traj.max_disagreement_after_consensus;
  return rep;
}

bool v2_nonincreasing(const MonitorReport& report, double dt) {
  return report.v2_max_increase_per_step <= kStepDrift * dt;
}

bool rate_bound_holds(const MonitorReport& report) {
  if (!report.v1_max_slope_outside_consensus) return true;
  const double n = static_cast<double>(std::max<std::size_t>(report.agent_count, 1));
  return *report.v1_max_slope_outside_consensus <=
         -report.min_lambda_along_trajectory / n + kRateSlack;
}

bool consensus_persists(const MonitorReport& report, double tolerance) {
  return report.max_disagreement_after_consensus.has_value() &&
         *report.max_disagreement_after_consensus <= 2.0 * tolerance;
}

std::vector<MonitorReport> simulate_batch(std::span<const SimConfig> configs, double bound) {
  std::vector<MonitorReport> out(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  const auto n = static_cast<std::ptrdiff_t>(configs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = build_report(integrate(configs[k]), configs[k], bound);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<MonitorReport> simulate_batch_serial(std::span<const SimConfig> configs, double bound) {
  std::vector<MonitorReport> out;
  out.reserve(configs.size());
  for (const auto& c : configs) out.push_back(build_report(integrate(c), c, bound));
  return out;
}

}  // namespace attsync
