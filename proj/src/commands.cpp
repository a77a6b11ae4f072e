#include "attsync/commands.hpp"

#include <fstream>
#include <ostream>

#include "json.hpp"

#include "attsync/errors.hpp"
#include "attsync/scenario.hpp"
#include "attsync/svg_plot.hpp"
#include "attsync/trajectory_io.hpp"

namespace attsync::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path resolve(const fs::path& out_dir, const std::string& name) {
  const fs::path p(name);
  return p.is_absolute() ? p : out_dir / p;
}

void write_json(const fs::path& path, const json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const ContractViolation& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeError;
  }
}

json mode_json(const SignMode& m) {
  json j{{"kind", m.name()}};
  if (m.kind != SignMode::Kind::Exact) j["epsilon"] = m.epsilon;
  return j;
}

}  // namespace

int run(const fs::path& scenario_path, const fs::path& out_dir, std::ostream& log,
        std::ostream& err, RunPaths* written) {
  return guarded(err, [&] {
    const Scenario scenario = load_scenario(scenario_path);
    const SimConfig config = scenario.to_config();
    if (!config.graph.is_connected())
      err << "warning: graph has " << config.graph.component_count()
          << " components; finite-time consensus is only expected on connected graphs\n";

    const TrajectoryRecord traj = integrate(config);
    const MonitorReport report = build_report(traj, config, scenario.invariance_bound);

    RunPaths paths{resolve(out_dir, scenario.outputs.trajectory),
                   resolve(out_dir, scenario.outputs.report)};
    if (paths.trajectory.has_parent_path()) fs::create_directories(paths.trajectory.parent_path());
    write_trajectory_csv(paths.trajectory, traj);

    json events = json::array();
    for (const auto& e : traj.events) events.push_back({{"time", e.time}, {"kind", to_string(e.kind)}});
    json doc{{"scenario", scenario.name},
             {"agents", config.graph.node_count()},
             {"dt", config.dt},
             {"t_max", config.t_max},
             {"steps", traj.steps},
             {"mode", mode_json(config.mode)},
             {"consensus_tolerance", config.consensus_tolerance},
             {"events", events},
             {"monitors", to_json(report)}};
    if (scenario.is_seeded()) doc["seed"] = std::get<SeededInitialState>(scenario.initial_state).seed;
    write_json(paths.report, doc);

    log << scenario.name << ": " << traj.steps << " steps, ";
    if (report.singularity_time)
      log << "singularity at t = " << *report.singularity_time;
    else if (report.consensus_time)
      log << "consensus at t = " << *report.consensus_time;
    else
      log << "no consensus before t_max";
    log << "\n  trajectory: " << paths.trajectory.string() << "\n  report:     " << paths.report.string()
        << '\n';
    if (written) *written = paths;
    return kOk;
  });
}

int plot(const fs::path& trajectory, const std::string& kind_name, const std::optional<fs::path>& out,
         std::ostream& log, std::ostream& err, fs::path* written) {
  return guarded(err, [&] {
    const PlotKind kind = parse_plot_kind(kind_name);
    const TrajectoryTable table = read_trajectory_csv(trajectory);
    const Figure fig = make_figure(table, kind);
    const fs::path dest =
        out ? *out : trajectory.parent_path() / (trajectory.stem().string() + "_" + kind_name + ".svg");
    if (dest.has_parent_path()) fs::create_directories(dest.parent_path());
    std::ofstream svg(dest, std::ios::binary);
    if (!svg) throw std::runtime_error("cannot write " + dest.string());
    svg << render_svg(fig);
    log << "figure: " << dest.string() << '\n';
    if (written) *written = dest;
    return kOk;
  });
}

int sweep(const fs::path& scenario_path, std::int64_t count, std::uint64_t seed, const fs::path& out_dir,
          const std::optional<fs::path>& out, std::ostream& log, std::ostream& err, fs::path* written) {
  return guarded(err, [&] {
    if (count <= 0) throw ContractViolation("--count must be a positive integer");
    const Scenario scenario = load_scenario(scenario_path);
    if (!scenario.is_seeded())
      throw ValidationError("initial_state", "sweep needs a seeded initial state");

    std::vector<std::uint64_t> seeds;
    std::vector<SimConfig> configs;
    for (std::int64_t k = 0; k < count; ++k) {
      seeds.push_back(derive_seed(seed, static_cast<std::uint64_t>(k)));
      configs.push_back(scenario.with_seed(seeds.back()).to_config());
    }
    const auto reports = simulate_batch(configs, scenario.invariance_bound);

    json runs = json::array();
    bool all_consensus = true, all_invariant = true, all_monotone = true, all_persist = true,
         all_rate = true;
    for (std::size_t k = 0; k < reports.size(); ++k) {
      const auto& r = reports[k];
      const bool monotone = v2_nonincreasing(r, scenario.dt);
      const bool persists = consensus_persists(r, scenario.consensus_tolerance);
      const bool rate = rate_bound_holds(r);
      all_consensus = all_consensus && r.consensus_time.has_value();
      all_invariant = all_invariant && !r.invariance_violated;
      all_monotone = all_monotone && monotone;
      all_persist = all_persist && persists;
      all_rate = all_rate && rate;
      json run = to_json(r);
      run["index"] = k;
      run["seed"] = seeds[k];
      run["v2_nonincreasing"] = monotone;
      run["consensus_persists"] = persists;
      run["rate_bound_holds"] = rate;
      runs.push_back(std::move(run));
    }
    const bool pass = all_consensus && all_invariant && all_monotone && all_persist && all_rate;
    json doc{{"scenario", scenario.name},
             {"count", count},
             {"seed", seed},
             {"runs", runs},
             {"aggregate",
              {{"consensus_reached", all_consensus},
               {"invariance_held", all_invariant},
               {"v2_nonincreasing", all_monotone},
               {"consensus_persists", all_persist},
               {"rate_bound_holds", all_rate},
               {"pass", pass}}}};
    const fs::path dest = out ? *out : resolve(out_dir, scenario.outputs.summary);
    write_json(dest, doc);
    log << scenario.name << ": " << count << " runs, aggregate " << (pass ? "PASS" : "FAIL")
        << "\n  summary: " << dest.string() << '\n';
    if (written) *written = dest;
    return kOk;
  });
}

}  // namespace attsync::cli
