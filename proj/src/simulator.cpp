#include "wpr/simulator.hpp"

#include <cmath>
#include <string>

#include "wpr/beamforming.hpp"
#include "wpr/error.hpp"
#include "wpr/model.hpp"
#include "wpr/parallel.hpp"
#include "wpr/timesplit.hpp"

namespace wpr {

namespace {

constexpr std::uint32_t kMaxResamples = 16;

struct SchemeRate {
  double tau;
  double rate;
};

SchemeRate relay_rate(const SystemConfigd& cfg, double z_m) {
  const double kappa = 2 * cfg.eta * cfg.p / cfg.n0;
  const double beta = kappa * z_m;
  if (!(beta > 0)) return {0.5, 0.0};
  const auto ts = optimal_tau(beta);
  return {ts.tau_hat, throughput_g(ts.tau_hat, z_m, kappa, 0.5)};
}

}  // namespace

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::antenna_count: return "antenna_count";
    case SweepVariable::placement_grid: return "placement_grid";
    case SweepVariable::snr: return "snr";
  }
  return "unknown";
}

SweepVariable sweep_variable_from_string(std::string_view name) {
  for (auto v : {SweepVariable::antenna_count, SweepVariable::placement_grid, SweepVariable::snr})
    if (to_string(v) == name) return v;
  throw ConfigError("unknown sweep variable '" + std::string(name) +
                    "' (expected antenna_count, placement_grid or snr)");
}

std::vector<double> default_placement_values() {
  std::vector<double> v;
  for (int d = 7; d <= 13; ++d) v.push_back(d);
  return v;
}

SystemConfigd with_direct_distance(SystemConfigd cfg) {
  if (!cfg.d_sd) cfg.d_sd = cfg.d3 + cfg.d4;
  return cfg;
}

double direct_rate(const SystemConfigd& cfg, const ChannelRealizationd& ch) {
  if (!cfg.d_sd) throw ConfigError("direct baseline requires d_sd");
  if (!ch.f0) throw ConfigError("direct baseline requires the S->D channel f0");
  // Matched beamforming conj(h1)/||h1|| delivers ||h1||^2 to the source.
  const double z = ch.h1.squaredNorm() * std::norm(*ch.f0) / std::pow(cfg.d1 * *cfg.d_sd, cfg.alpha);
  const double kappa = cfg.eta * cfg.p / cfg.n0;
  const double beta = kappa * z;
  if (!(beta > 0)) return 0.0;
  const auto ts = optimal_tau(beta, 1.0);
  return throughput_g(ts.tau_hat, z, kappa, 1.0);
}

TrialResult evaluate_trial(const SystemConfigd& cfg, const ChannelRealizationd& ch) {
  const auto eff = effective_channels(cfg, ch);
  const auto opt = optimal_beamformer(eff);
  const auto bench = benchmark_beamformer(eff, ch, cfg);
  const auto r_opt = relay_rate(cfg, opt.z_m);
  const auto r_bench = relay_rate(cfg, bench.z_m);

  TrialResult t;
  t.z_m_opt = opt.z_m;
  t.z_m_bench = bench.z_m;
  t.tau_opt = r_opt.tau;
  t.tau_bench = r_bench.tau;
  t.rate_opt = r_opt.rate;
  t.rate_bench = r_bench.rate;
  t.rate_direct = ch.f0 ? direct_rate(with_direct_distance(cfg), ch) : 0.0;
  return t;
}

TrialResult run_trial(const SystemConfigd& cfg, std::uint64_t seed) {
  validate(cfg);
  for (std::uint32_t attempt = 0;; ++attempt) {
    const std::uint64_t draw_seed = attempt == 0 ? seed : detail::mix_seed(seed ^ attempt);
    try {
      TrialResult t = evaluate_trial(cfg, sample_channels(cfg, draw_seed));
      t.resamples = attempt;
      return t;
    } catch (const DegenerateChannelError&) {
      if (attempt + 1 >= kMaxResamples) throw;
    }
  }
}

SystemConfigd sweep_config(const SweepSpec& spec, const SystemConfigd& base, double value,
                           double value2) {
  SystemConfigd cfg = base;
  switch (spec.variable) {
    case SweepVariable::antenna_count:
      if (!(value >= 1) || value != std::floor(value) || value > 1e7)
        throw ConfigError("antenna sweep values must be positive integers");
      cfg.n = static_cast<std::uint32_t>(value);
      break;
    case SweepVariable::placement_grid:
      cfg.d1 = value;
      cfg.d2 = kPlacementSpan - value;
      cfg.d3 = value2;
      cfg.d4 = kPlacementSpan - value2;
      if (!(cfg.d1 > 0 && cfg.d2 > 0 && cfg.d3 > 0 && cfg.d4 > 0))
        throw ConfigError("placement values must lie strictly inside (0, 20)");
      break;
    case SweepVariable::snr:
      if (!std::isfinite(value)) throw ConfigError("snr values must be finite");
      cfg.n0 = 1.0;
      cfg.p = std::pow(10.0, value / 10.0);
      break;
  }
  validate(cfg);
  return cfg;
}

SweepTable sweep(const SweepSpec& spec, const SystemConfigd& base, unsigned threads) {
  if (spec.values.empty()) throw ConfigError("sweep requires at least one value");
  if (spec.trials < 1) throw ConfigError("trials must be >= 1");

  struct Job {
    SystemConfigd cfg;
    double value, value2;
  };
  std::vector<Job> jobs;
  if (spec.variable == SweepVariable::placement_grid) {
    for (double d1 : spec.values)
      for (double d3 : spec.values) jobs.push_back({sweep_config(spec, base, d1, d3), d1, d3});
  } else {
    for (double v : spec.values) jobs.push_back({sweep_config(spec, base, v), v, 0.0});
  }

  const std::size_t trials = spec.trials;
  std::vector<TrialResult> results(jobs.size() * trials);
  parallel_for(results.size(), threads, [&](std::size_t k) {
    results[k] = run_trial(jobs[k / trials].cfg, spec.base_seed + k % trials);
  });

  SweepTable table;
  table.variable = spec.variable;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    SweepPoint pt{jobs[j].value, jobs[j].value2, {}, 0.0};
    std::uint32_t resamples = 0;
    // Fixed summation order keeps the means independent of scheduling.
    for (std::size_t t = 0; t < trials; ++t) {
      const auto& r = results[j * trials + t];
      pt.mean.z_m_opt += r.z_m_opt;
      pt.mean.z_m_bench += r.z_m_bench;
      pt.mean.tau_opt += r.tau_opt;
      pt.mean.tau_bench += r.tau_bench;
      pt.mean.rate_opt += r.rate_opt;
      pt.mean.rate_bench += r.rate_bench;
      pt.mean.rate_direct += r.rate_direct;
      pt.z_ratio_mean += r.z_m_bench / r.z_m_opt;
      resamples += r.resamples;
    }
    const double inv = 1.0 / static_cast<double>(trials);
    pt.mean.z_m_opt *= inv;
    pt.mean.z_m_bench *= inv;
    pt.mean.tau_opt *= inv;
    pt.mean.tau_bench *= inv;
    pt.mean.rate_opt *= inv;
    pt.mean.rate_bench *= inv;
    pt.mean.rate_direct *= inv;
    pt.z_ratio_mean *= inv;
    pt.mean.resamples = resamples;
    table.points.push_back(pt);
  }
  return table;
}

}  // namespace wpr
