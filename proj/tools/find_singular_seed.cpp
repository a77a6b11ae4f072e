// Searches seeds of the seeded initial-state generator for a state that starts
// inside the chart (max |x_i| < pi) yet drives some agent across |x_i| = pi.
//
//   find_singular_seed <scenario.json> [--first S] [--tries N] [--fraction F ...]
//                      [--margin M] [--horizon T]

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <numbers>
#include <vector>

#include "CLI11.hpp"

#include "attsync/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Search for a seeded initial state exhibiting the pi singularity"};
  std::string path;
  std::uint64_t first = 1;
  std::uint64_t tries = 20000;
  std::vector<double> fractions{0.5, 0.6, 0.7, 0.8, 0.9};
  double margin = 0.0;
  double horizon = 2.0;
  app.add_option("scenario", path, "Seeded scenario JSON (graph, dt, mode, bound)")->required();
  app.add_option("--first", first, "First seed to try");
  app.add_option("--tries", tries, "Seeds to try per fraction");
  app.add_option("--fraction", fractions, "Fractions of sum_sq_norm_bound to try");
  app.add_option("--margin", margin, "Require initial max |x_i| <= pi - margin");
  app.add_option("--horizon", horizon, "Simulated seconds per candidate");
  CLI11_PARSE(app, argc, argv);

  const attsync::Scenario base = attsync::load_scenario(path);
  if (!base.is_seeded()) {
    std::cerr << "scenario must use a seeded initial state\n";
    return 2;
  }
  for (double fraction : fractions) {
    for (std::uint64_t seed = first; seed < first + tries; ++seed) {
      attsync::Scenario s = base.with_seed(seed);
      auto& ic = std::get<attsync::SeededInitialState>(s.initial_state);
      ic.fraction = fraction;
      const auto x0 = attsync::generate_initial_state(s.graph.node_count(), ic);
      if (attsync::max_norm(x0) > std::numbers::pi - margin) continue;
      s.t_max = std::max(horizon, s.dt);
      const auto traj = attsync::integrate(s.to_config());
      if (const auto t = traj.first_event(attsync::EventKind::SingularityCrossed)) {
        std::cout << "seed " << seed << " fraction " << fraction << " sum_sq_norm "
                  << 2.0 * attsync::lyapunov_v2(x0) << " initial max_norm " << attsync::max_norm(x0)
                  << " singularity at t = " << *t << '\n';
        return 0;
      }
    }
  }
  std::cout << "no singular seed found\n";
  return 1;
}
