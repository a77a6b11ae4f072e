#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>

#include "json.hpp"

#include "attsync/simulator.hpp"

namespace attsync {

/// Reproducible pseudo-random initial state: each agent is drawn uniformly in
/// the ball of radius pi/2, then the stack is rescaled so that
/// sum |x_i|^2 = fraction * sum_sq_norm_bound.
struct SeededInitialState {
  std::uint64_t seed = 0;
  double sum_sq_norm_bound = 0.0;
  double fraction = 0.9;
};

struct ScenarioOutputs {
  std::string trajectory = "trajectory.csv";
  std::string report = "report.json";
  std::string summary = "summary.json";
};

/// In-memory form of a scenario JSON file.
struct Scenario {
  std::string name = "scenario";
  Graph graph;
  std::variant<StackedVec3, SeededInitialState> initial_state;
  double dt = 1e-3;
  double t_max = 20.0;
  SignMode mode = SignMode::deadband(1e-3);
  double consensus_tolerance = 1e-2;
  std::size_t record_stride = 1;
  /// C in the invariance check 2 V2 < C.
  double invariance_bound = 0.0;
  ScenarioOutputs outputs;

  bool is_seeded() const { return std::holds_alternative<SeededInitialState>(initial_state); }

  /// Materializes the initial state. Throws ValidationError when it is not a
  /// valid network state for the graph.
  SimConfig to_config() const;

  /// Copy with the seeded initial state's seed replaced.
  Scenario with_seed(std::uint64_t seed) const;
};

/// Throws ValidationError naming the offending field.
Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::filesystem::path& path);

StackedVec3 generate_initial_state(std::size_t n, const SeededInitialState& spec);

/// Seed for run `index` of a sweep started from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

nlohmann::json to_json(const MonitorReport& report);

}  // namespace attsync
