#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace attsync::cli {

/// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kValidationError = 2;
inline constexpr int kRuntimeError = 3;

struct RunPaths {
  std::filesystem::path trajectory;
  std::filesystem::path report;
};

/// Integrates a scenario and writes its trajectory CSV and report JSON under
/// out_dir (output paths from the scenario are resolved against it). A
/// detected singularity is a normal outcome.
int run(const std::filesystem::path& scenario, const std::filesystem::path& out_dir,
        std::ostream& log, std::ostream& err, RunPaths* written = nullptr);

/// Renders one figure kind of a trajectory CSV as SVG. Without `out` the file
/// goes next to the CSV as <stem>_<kind>.svg.
int plot(const std::filesystem::path& trajectory, const std::string& kind,
         const std::optional<std::filesystem::path>& out, std::ostream& log, std::ostream& err,
         std::filesystem::path* written = nullptr);

/// Runs `count` seeded variants of a scenario and writes a summary JSON.
int sweep(const std::filesystem::path& scenario, std::int64_t count, std::uint64_t seed,
          const std::filesystem::path& out_dir, const std::optional<std::filesystem::path>& out,
          std::ostream& log, std::ostream& err, std::filesystem::path* written = nullptr);

}  // namespace attsync::cli
