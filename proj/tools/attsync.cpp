// Command-line front end: run scenarios, plot trajectories, sweep seeds.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "attsync/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Finite-time attitude synchronization simulator"};
  app.require_subcommand(1);

  std::string scenario;
  std::string out_dir = ".";
  auto* run = app.add_subcommand("run", "Integrate a scenario; write trajectory CSV and report JSON");
  run->add_option("scenario", scenario, "Scenario JSON file")->required();
  run->add_option("--out-dir", out_dir, "Directory for output files");

  std::string trajectory;
  std::string kind;
  std::string plot_out;
  auto* plot = app.add_subcommand("plot", "Render a trajectory CSV as an SVG figure");
  plot->add_option("trajectory", trajectory, "Trajectory CSV")->required();
  plot->add_option("--kind", kind, "states | v2 | max_norm")->required();
  plot->add_option("--out", plot_out, "Output SVG path");

  std::int64_t count = 0;
  std::uint64_t seed = 0;
  std::string sweep_out;
  auto* sweep = app.add_subcommand("sweep", "Run seeded variants of a scenario and summarize");
  sweep->add_option("scenario", scenario, "Scenario JSON file (seeded initial state)")->required();
  sweep->add_option("--count", count, "Number of runs")->required();
  sweep->add_option("--seed", seed, "Base seed")->required();
  sweep->add_option("--out-dir", out_dir, "Directory for output files");
  sweep->add_option("--out", sweep_out, "Summary JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : attsync::cli::kValidationError;
  }

  if (*run) return attsync::cli::run(scenario, out_dir, std::cout, std::cerr);
  if (*plot)
    return attsync::cli::plot(trajectory, kind,
                              plot_out.empty() ? std::nullopt : std::optional<std::filesystem::path>(plot_out),
                              std::cout, std::cerr);
  return attsync::cli::sweep(scenario, count, seed, out_dir,
                             sweep_out.empty() ? std::nullopt : std::optional<std::filesystem::path>(sweep_out),
                             std::cout, std::cerr);
}
