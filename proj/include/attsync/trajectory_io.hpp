#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "attsync/simulator.hpp"

namespace attsync {

/// Flat view of a trajectory CSV:
/// t,x_1_1,x_1_2,x_1_3,...,x_n_3,v1,v2,max_norm,disagreement
struct TrajectoryTable {
  std::size_t agents = 0;
  std::vector<double> times;
  std::vector<StackedVec3> states;
  std::vector<double> v1;
  std::vector<double> v2;
  std::vector<double> max_norm;
  std::vector<double> disagreement;

  std::size_t size() const { return times.size(); }
};

std::vector<std::string> trajectory_header(std::size_t agents);

/// Values are written in shortest round-trip form, so reading back gives the
/// exact doubles.
void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& traj);
void write_trajectory_csv(const std::filesystem::path& path, const TrajectoryRecord& traj);

/// Throws ValidationError on a bad header or row.
TrajectoryTable read_trajectory_csv(std::istream& in);
TrajectoryTable read_trajectory_csv(const std::filesystem::path& path);

}  // namespace attsync
