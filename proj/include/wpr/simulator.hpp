#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "wpr/channel.hpp"
#include "wpr/system_config.hpp"

namespace wpr {

/// Per-realization outcome of the optimal and benchmark schemes plus the
/// direct source-to-destination baseline. Rates are in bits/s/Hz.
struct TrialResult {
  double z_m_opt{};
  double z_m_bench{};
  double tau_opt{};
  double tau_bench{};
  double rate_opt{};
  double rate_bench{};
  double rate_direct{};
  std::uint32_t resamples{};  // degenerate draws replaced before this result

  bool operator==(const TrialResult&) const = default;
};

enum class SweepVariable { antenna_count, placement_grid, snr };

std::string_view to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(std::string_view name);  // throws ConfigError

struct SweepSpec {
  SweepVariable variable{SweepVariable::antenna_count};
  std::vector<double> values;
  std::uint32_t trials{1000};
  std::uint64_t base_seed{42};
};

/// One sweep point: its coordinates and trial-averaged results.
struct SweepPoint {
  double value{};   // n, d1, or transmit SNR in dB
  double value2{};  // d3 for placement sweeps, otherwise 0
  TrialResult mean;
  double z_ratio_mean{};  // mean of z_m_bench / z_m_opt
};

struct SweepTable {
  SweepVariable variable{};
  std::vector<SweepPoint> points;
};

/// Sum of PB->S and S->R (and of PB->R and R->D) in placement sweeps, meters.
inline constexpr double kPlacementSpan = 20.0;
/// Default axis of placement sweeps, 7..13 m in 1 m steps.
std::vector<double> default_placement_values();

/// Copy of cfg with d_sd defaulted to d3 + d4 (collinear S-R-D) if unset.
SystemConfigd with_direct_distance(SystemConfigd cfg);

/// Direct-transmission rate with matched beamforming toward the source and
/// its own optimal time split: the whole post-harvest time is one hop.
double direct_rate(const SystemConfigd& cfg, const ChannelRealizationd& ch);

/// Optimal, benchmark and direct rates for a given realization. The direct
/// baseline uses d_sd, defaulted to d3 + d4.
TrialResult evaluate_trial(const SystemConfigd& cfg, const ChannelRealizationd& ch);

/// Samples a realization from seed and evaluates it. Degenerate draws are
/// redrawn from a derived seed and counted in `resamples`.
TrialResult run_trial(const SystemConfigd& cfg, std::uint64_t seed);

/// Averages run_trial over seeds base_seed + k, k < trials, for each value.
/// Results are bit-identical for every `threads` (0 = hardware concurrency).
SweepTable sweep(const SweepSpec& spec, const SystemConfigd& base, unsigned threads = 0);

/// Scenario for one sweep value (placement points take d1 and d3).
SystemConfigd sweep_config(const SweepSpec& spec, const SystemConfigd& base, double value,
                           double value2 = 0);

}  // namespace wpr
