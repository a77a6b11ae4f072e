#include "attsync/trajectory_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "attsync/errors.hpp"

namespace attsync {

namespace {

void put(std::ostream& out, double v) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  out.write(buf.data(), res.ptr - buf.data());
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

double parse_double(const std::string& s, std::size_t row, std::size_t col) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw ValidationError("trajectory row " + std::to_string(row),
                          "column " + std::to_string(col + 1) + " is not a number: '" + s + "'");
  return v;
}

}  // namespace

std::vector<std::string> trajectory_header(std::size_t agents) {
  std::vector<std::string> h{"t"};
  for (std::size_t i = 1; i <= agents; ++i)
    for (int c = 1; c <= 3; ++c) h.push_back("x_" + std::to_string(i) + "_" + std::to_string(c));
  for (const char* name : {"v1", "v2", "max_norm", "disagreement"}) h.emplace_back(name);
  return h;
}

void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& traj) {
  const std::size_t agents = traj.states.empty() ? 0 : traj.states.front().size();
  const auto header = trajectory_header(agents);
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << '\n';
  for (std::size_t r = 0; r < traj.size(); ++r) {
    put(out, traj.times[r]);
    for (const auto& xi : traj.states[r])
      for (int c = 0; c < 3; ++c) {
        out << ',';
        put(out, xi[c]);
      }
    for (double v : {traj.v1[r], traj.v2[r], traj.max_norm[r], traj.disagreement[r]}) {
      out << ',';
      put(out, v);
    }
    out << '\n';
  }
}

void write_trajectory_csv(const std::filesystem::path& path, const TrajectoryRecord& traj) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_trajectory_csv(out, traj);
}

TrajectoryTable read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("trajectory header", "empty file");
  const auto header = split(line);
  if (header.size() < 5 || (header.size() - 5) % 3 != 0)
    throw ValidationError("trajectory header", "unexpected column count " + std::to_string(header.size()));
  TrajectoryTable table;
  table.agents = (header.size() - 5) / 3;
  if (header != trajectory_header(table.agents))
    throw ValidationError("trajectory header", "column names do not match the schema");

  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size())
      throw ValidationError("trajectory row " + std::to_string(row),
                            "expected " + std::to_string(header.size()) + " columns");
    std::vector<double> v(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) v[c] = parse_double(cells[c], row, c);
    table.times.push_back(v[0]);
    StackedVec3 x(table.agents);
    for (std::size_t i = 0; i < table.agents; ++i) x[i] = {v[1 + 3 * i], v[2 + 3 * i], v[3 + 3 * i]};
    table.states.push_back(std::move(x));
    const std::size_t tail = 1 + 3 * table.agents;
    table.v1.push_back(v[tail]);
    table.v2.push_back(v[tail + 1]);
    table.max_norm.push_back(v[tail + 2]);
    table.disagreement.push_back(v[tail + 3]);
  }
  return table;
}

TrajectoryTable read_trajectory_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("trajectory", "cannot open " + path.string());
  return read_trajectory_csv(in);
}

}  // namespace attsync
