#include "wpr/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wpr/beamforming.hpp"
#include "wpr/error.hpp"
#include "wpr/model.hpp"
#include "wpr/timesplit.hpp"

namespace wpr {

namespace {

std::string format_csv(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open output file '" + path + "'");
  file << content;
  file.close();
  if (!file) throw IoError("failed writing output file '" + path + "'");
}

}  // namespace

std::string RunManifest::to_json(bool include_timing) const {
  nlohmann::ordered_json j;
  j["config"] = config_path;
  j["command"] = command;
  j["output"] = output_path;
  j["seed"] = base_seed;
  j["trials"] = trials;
  j["version"] = tool_version;
  if (include_timing) j["wall_clock_s"] = wall_clock_seconds;
  return j.dump();
}

std::string optimize_report(const Scenario& scenario, std::uint64_t seed,
                            const RunManifest& manifest) {
  const auto& cfg = scenario.system;
  const auto ch = sample_channels(cfg, seed);
  const auto eff = effective_channels(cfg, ch);
  const auto sol = optimal_beamformer(eff);
  const double kappa = 2 * cfg.eta * cfg.p / cfg.n0;
  const auto ts = optimal_tau(kappa * sol.z_m);
  const double rate = throughput_g(ts.tau_hat, sol.z_m, kappa, 0.5);

  std::ostringstream out;
  for (Eigen::Index i = 0; i < sol.w.size(); ++i)
    out << "w[" << i << "] = " << format_exact(sol.w[i].real()) << ' '
        << format_exact(sol.w[i].imag()) << '\n';
  out << "x_bar = " << format_exact(sol.x_bar) << '\n'
      << "case_id = " << to_string(*sol.case_id) << '\n'
      << "z_m = " << format_exact(sol.z_m) << '\n'
      << "tau_hat = " << format_exact(ts.tau_hat) << '\n'
      << "rate = " << format_exact(rate) << '\n'
      << "# manifest: " << manifest.to_json(false) << '\n';
  return out.str();
}

std::string sweep_csv(const SweepTable& table, const RunManifest& manifest) {
  std::ostringstream out;
  switch (table.variable) {
    case SweepVariable::antenna_count: out << "n,rate_opt,rate_bench\n"; break;
    case SweepVariable::placement_grid: out << "d1,d3,rate_opt\n"; break;
    case SweepVariable::snr: out << "snr_db,rate_relay,rate_direct\n"; break;
  }
  for (const auto& pt : table.points) {
    switch (table.variable) {
      case SweepVariable::antenna_count:
        out << format_csv(pt.value) << ',' << format_csv(pt.mean.rate_opt) << ','
            << format_csv(pt.mean.rate_bench) << '\n';
        break;
      case SweepVariable::placement_grid:
        out << format_csv(pt.value) << ',' << format_csv(pt.value2) << ','
            << format_csv(pt.mean.rate_opt) << '\n';
        break;
      case SweepVariable::snr:
        out << format_csv(pt.value) << ',' << format_csv(pt.mean.rate_opt) << ','
            << format_csv(pt.mean.rate_direct) << '\n';
        break;
    }
  }
  out << "# manifest: " << manifest.to_json(false) << '\n';
  return out.str();
}

std::string sweep_csv(const Scenario& scenario, const RunManifest& manifest, unsigned threads) {
  return sweep_csv(sweep(scenario.sweep_spec(), scenario.system, threads), manifest);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Optimal energy beamforming and time split for wirelessly powered relaying",
               "wpr-opt"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path = "-";
  std::uint64_t seed = 0;
  std::uint32_t trials = 0;
  unsigned threads = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "Scenario file (key = value lines)")->required();
    sub->add_option("--out", out_path, "Output path, '-' for stdout");
    sub->add_option("--seed", seed, "Override the scenario seed");
    sub->add_option("--trials", trials, "Override the trial count")->check(CLI::PositiveNumber);
    sub->add_option("--threads", threads, "Worker threads (0 = all cores)");
  };
  auto* optimize = app.add_subcommand("optimize", "Solve one channel realization");
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a Monte Carlo sweep and write CSV");
  add_common(optimize);
  add_common(sweep_cmd);

  // CLI11 parses argv-style arrays in reverse order.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Scenario scenario = load_config(config_path);
    if (optimize->count("--seed") || sweep_cmd->count("--seed")) scenario.seed = seed;
    if (trials > 0) scenario.trials = trials;

    RunManifest manifest;
    manifest.config_path = config_path;
    manifest.output_path = out_path;
    manifest.base_seed = scenario.seed;
    manifest.trials = scenario.trials;

    std::string content;
    if (optimize->parsed()) {
      manifest.command = "optimize";
      manifest.trials = 1;
      content = optimize_report(scenario, scenario.seed, manifest);
    } else {
      manifest.command = "sweep";
      content = sweep_csv(scenario, manifest, threads);
    }
    write_output(out_path, content, out);
    manifest.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    err << "# run: " << manifest.to_json(true) << '\n';
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "wpr-opt: config error: " << e.what() << '\n';
    return kExitParse;
  } catch (const DomainError& e) {
    err << "wpr-opt: domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    err << "wpr-opt: I/O error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace wpr
