#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wpr/scenario.hpp"

namespace wpr {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitDomain = 3,
  kExitIo = 4,
};

/// Provenance embedded in every result file.
struct RunManifest {
  std::string config_path;
  std::string command;
  std::string output_path;  // "-" for stdout
  std::uint64_t base_seed{};
  std::uint32_t trials{};
  std::string tool_version{kToolVersion};
  double wall_clock_seconds{};

  /// Single-line JSON. Timing is optional since it breaks byte stability.
  std::string to_json(bool include_timing) const;
};

/// Single-realization report for seed: w entries, x_bar, case_id, z_m,
/// tau_hat and rate, followed by a `# manifest:` comment line.
std::string optimize_report(const Scenario& scenario, std::uint64_t seed,
                            const RunManifest& manifest);

/// CSV for the scenario's sweep, one row per point in sweep order, followed
/// by a `# manifest:` comment line. Numbers carry 9 significant digits.
std::string sweep_csv(const Scenario& scenario, const RunManifest& manifest, unsigned threads = 0);
std::string sweep_csv(const SweepTable& table, const RunManifest& manifest);

/// Entry point of the wpr-opt tool; returns a process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wpr
