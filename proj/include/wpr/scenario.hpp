#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wpr/simulator.hpp"
#include "wpr/system_config.hpp"

namespace wpr {

/// Contents of a scenario file: the system parameters plus run controls and an
/// optional sweep definition.
///
/// The file format is one `key = value` per line; `#` starts a comment.
/// Keys: p, n0, eta, alpha, n, d1, d2, d3, d4, d_sd, trials, seed, sweep
/// (antenna_count | placement_grid | snr) and values (comma-separated list).
struct Scenario {
  SystemConfigd system;
  std::uint32_t trials{1000};
  std::uint64_t seed{42};
  std::optional<SweepVariable> sweep;
  std::vector<double> values;

  /// Throws ConfigError when the scenario has no sweep.
  SweepSpec sweep_spec() const;

  bool operator==(const Scenario&) const = default;
};

/// Parses and validates a scenario. Throws ParseError naming the key and line.
Scenario parse_config(std::string_view text);

/// Reads and parses a scenario file. Throws IoError if it cannot be read.
Scenario load_config(const std::filesystem::path& path);

/// Serializes a scenario so that parse_config(emit_config(s)) == s.
std::string emit_config(const Scenario& s);

/// Shortest round-trip decimal form ("%.17g").
std::string format_exact(double v);

}  // namespace wpr
