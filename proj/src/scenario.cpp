#include "attsync/scenario.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "attsync/errors.hpp"

namespace attsync {

namespace {

using nlohmann::json;

// The standard distributions are implementation-defined, so uniform draws are
// built directly from the engine output to keep ICs bit-reproducible.
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

const json& require(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(path + key, "missing");
  return j.at(key);
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) throw ValidationError(field, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ValidationError(field, "must be finite");
  return v;
}

std::uint64_t unsigned_int(const json& j, const std::string& field) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw ValidationError(field, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& path = "") {
  return j.contains(key) ? number(j.at(key), path + key) : fallback;
}

Vec3 parse_vec3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) throw ValidationError(field, "expected 3 numbers");
  return {number(j[0], field + "[0]"), number(j[1], field + "[1]"), number(j[2], field + "[2]")};
}

Graph parse_graph(const json& j) {
  const auto n = unsigned_int(require(j, "nodes", "graph."), "graph.nodes");
  if (n == 0) throw ValidationError("graph.nodes", "must be >= 1");
  const json& edges = require(j, "edges", "graph.");
  if (!edges.is_array()) throw ValidationError("graph.edges", "expected an array of pairs");
  std::vector<Edge> list;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string field = "graph.edges[" + std::to_string(k) + "]";
    const json& e = edges[k];
    if (!e.is_array() || e.size() != 2) throw ValidationError(field, "expected [tail, head]");
    list.emplace_back(unsigned_int(e[0], field), unsigned_int(e[1], field));
  }
  try {
    return Graph::from_edges(n, std::move(list));
  } catch (const ContractViolation& err) {
    throw ValidationError("graph.edges", err.what());
  }
}

SignMode parse_mode(const json& j) {
  if (j.is_string()) return parse_mode(json{{"kind", j}});
  const json& kind_j = require(j, "kind", "mode.");
  if (!kind_j.is_string()) throw ValidationError("mode.kind", "expected a string");
  const auto kind = kind_j.get<std::string>();
  const double eps = number_or(j, "epsilon", 1e-3, "mode.");
  if (kind == "exact") return SignMode::exact();
  if (kind != "deadband" && kind != "smooth")
    throw ValidationError("mode.kind", "unknown sign mode '" + kind + "'");
  if (!(eps > 0.0)) throw ValidationError("mode.epsilon", "must be > 0");
  return kind == "deadband" ? SignMode::deadband(eps) : SignMode::smooth(eps);
}

}  // namespace

SimConfig Scenario::to_config() const {
  StackedVec3 x0 = std::holds_alternative<StackedVec3>(initial_state)
                       ? std::get<StackedVec3>(initial_state)
                       : generate_initial_state(graph.node_count(),
                                                std::get<SeededInitialState>(initial_state));
  SimConfig cfg;
  cfg.graph = graph;
  try {
    cfg.initial_state = NetworkState(std::move(x0));
  } catch (const DomainError& err) {
    throw ValidationError("initial_state", err.what());
  }
  cfg.dt = dt;
  cfg.t_max = t_max;
  cfg.mode = mode;
  cfg.consensus_tolerance = consensus_tolerance;
  cfg.record_stride = record_stride;
  cfg.validate();
  return cfg;
}

Scenario Scenario::with_seed(std::uint64_t seed) const {
  if (!is_seeded()) throw ValidationError("initial_state", "scenario does not use a seeded initial state");
  Scenario copy = *this;
  std::get<SeededInitialState>(copy.initial_state).seed = seed;
  return copy;
}

Scenario parse_scenario(const json& j) {
  if (!j.is_object()) throw ValidationError("<root>", "expected a JSON object");
  Scenario s;
  if (j.contains("name")) {
    if (!j.at("name").is_string()) throw ValidationError("name", "expected a string");
    s.name = j.at("name").get<std::string>();
  }
  s.graph = parse_graph(require(j, "graph", ""));

  const json& ic = require(j, "initial_state", "");
  if (ic.is_object() && ic.contains("explicit")) {
    const json& rows = ic.at("explicit");
    if (!rows.is_array() || rows.size() != s.graph.node_count())
      throw ValidationError("initial_state.explicit",
                            "expected " + std::to_string(s.graph.node_count()) + " 3-vectors");
    StackedVec3 x;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string field = "initial_state.explicit[" + std::to_string(i) + "]";
      x.push_back(parse_vec3(rows[i], field));
      if (x.back().norm() > std::numbers::pi)
        throw ValidationError(field, "norm exceeds pi");
    }
    s.initial_state = std::move(x);
  } else if (ic.is_object() && ic.contains("seed")) {
    SeededInitialState seeded;
    seeded.seed = unsigned_int(ic.at("seed"), "initial_state.seed");
    seeded.sum_sq_norm_bound =
        number(require(ic, "sum_sq_norm_bound", "initial_state."), "initial_state.sum_sq_norm_bound");
    seeded.fraction = number_or(ic, "fraction", 0.9, "initial_state.");
    if (!(seeded.sum_sq_norm_bound > 0.0))
      throw ValidationError("initial_state.sum_sq_norm_bound", "must be > 0");
    if (!(seeded.fraction > 0.0 && seeded.fraction <= 1.0))
      throw ValidationError("initial_state.fraction", "must be in (0, 1]");
    s.initial_state = seeded;
  } else {
    throw ValidationError("initial_state", "expected {\"explicit\": [...]} or {\"seed\": ...}");
  }

  s.dt = number(require(j, "dt", ""), "dt");
  if (!(s.dt > 0.0)) throw ValidationError("dt", "must be > 0");
  if (s.dt > 1e-2) throw ValidationError("dt", "must be <= 1e-2");
  s.t_max = number(require(j, "t_max", ""), "t_max");
  if (s.t_max < s.dt) throw ValidationError("t_max", "must be >= dt");
  if (j.contains("mode")) s.mode = parse_mode(j.at("mode"));
  s.consensus_tolerance = number_or(j, "consensus_tolerance", 1e-2);
  if (s.consensus_tolerance < 0.0) throw ValidationError("consensus_tolerance", "must be >= 0");
  if (j.contains("record_stride")) {
    s.record_stride = unsigned_int(j.at("record_stride"), "record_stride");
    if (s.record_stride == 0) throw ValidationError("record_stride", "must be positive");
  }
  s.invariance_bound = number_or(j, "invariance_bound", std::numbers::pi * std::numbers::pi);
  if (!(s.invariance_bound > 0.0)) throw ValidationError("invariance_bound", "must be > 0");

  if (j.contains("outputs")) {
    const json& o = j.at("outputs");
    if (!o.is_object()) throw ValidationError("outputs", "expected an object");
    for (auto [key, dest] : {std::pair{"trajectory", &s.outputs.trajectory},
                             std::pair{"report", &s.outputs.report},
                             std::pair{"summary", &s.outputs.summary}}) {
      if (!o.contains(key)) continue;
      if (!o.at(key).is_string()) throw ValidationError(std::string("outputs.") + key, "expected a path");
      *dest = o.at(key).get<std::string>();
    }
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("scenario", "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& err) {
    throw ValidationError("scenario", std::string("malformed JSON: ") + err.what());
  }
  return parse_scenario(j);
}

StackedVec3 generate_initial_state(std::size_t n, const SeededInitialState& spec) {
  std::mt19937_64 rng(spec.seed);
  const double radius = 0.5 * std::numbers::pi;
  StackedVec3 x(n);
  double total = 0.0;
  for (auto& xi : x) {
    Vec3 p;
    do {
      p = {2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0};
    } while (p.squaredNorm() > 1.0 || p.squaredNorm() == 0.0);
    xi = radius * p;
    total += xi.squaredNorm();
  }
  const double scale = std::sqrt(spec.fraction * spec.sum_sq_norm_bound / total);
  for (auto& xi : x) xi *= scale;
  return x;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

nlohmann::json to_json(const MonitorReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  return json{
      {"agent_count", r.agent_count},
      {"consensus_time", opt(r.consensus_time)},
      {"final_disagreement", r.final_disagreement},
      {"max_disagreement_after_consensus", opt(r.max_disagreement_after_consensus)},
      {"v2_max_increase_per_step", r.v2_max_increase_per_step},
      {"invariance_bound", r.invariance_bound},
      {"invariance_violated", r.invariance_violated},
      {"min_lambda_along_trajectory", r.min_lambda_along_trajectory},
      {"lambda_a_priori_bound", r.lambda_a_priori_bound},
      {"v1_max_slope_outside_consensus", opt(r.v1_max_slope_outside_consensus)},
      {"singularity_time", opt(r.singularity_time)},
  };
}

}  // namespace attsync
