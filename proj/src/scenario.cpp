#include "wpr/scenario.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "wpr/error.hpp"

namespace wpr {

namespace {

constexpr std::array kKeys = {"p",  "n0", "eta",    "alpha", "n",     "d1",   "d2",
                              "d3", "d4", "d_sd", "trials", "seed", "sweep", "values"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Entry {
  std::string value;
  std::size_t line;
};

class Reader {
 public:
  explicit Reader(std::map<std::string, Entry> entries) : entries_(std::move(entries)) {}

  bool has(const std::string& key) const { return entries_.contains(key); }

  double real(const std::string& key) const {
    const auto& e = at(key);
    double v{};
    const auto* first = e.value.data();
    const auto* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v))
      throw ParseError(key, e.line, "expected a finite number, got '" + e.value + "'");
    return v;
  }

  std::uint64_t integer(const std::string& key) const {
    const auto& e = at(key);
    std::uint64_t v{};
    const auto* first = e.value.data();
    const auto* last = first + e.value.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
      throw ParseError(key, e.line, "expected a nonnegative integer, got '" + e.value + "'");
    return v;
  }

  std::vector<double> list(const std::string& key) const {
    const auto& e = at(key);
    std::vector<double> out;
    std::string_view rest = e.value;
    while (true) {
      const auto comma = rest.find(',');
      const auto item = trim(rest.substr(0, comma));
      double v{};
      const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size() || !std::isfinite(v))
        throw ParseError(key, e.line, "expected a comma-separated list of numbers");
      out.push_back(v);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return out;
  }

  const std::string& text(const std::string& key) const { return at(key).value; }
  std::size_t line(const std::string& key) const { return has(key) ? at(key).line : 0; }

  void require(const std::string& key) const {
    if (!has(key)) throw ParseError(key, 0, "required key is missing");
  }

 private:
  const Entry& at(const std::string& key) const { return entries_.at(key); }
  std::map<std::string, Entry> entries_;
};

void check(bool ok, const Reader& r, const std::string& key, const std::string& what) {
  if (!ok) throw ParseError(key, r.line(key), what);
}

}  // namespace

SweepSpec Scenario::sweep_spec() const {
  if (!sweep) throw ConfigError("scenario defines no sweep (set 'sweep = ...')");
  SweepSpec spec;
  spec.variable = *sweep;
  spec.values = values;
  if (spec.values.empty() && *sweep == SweepVariable::placement_grid)
    spec.values = default_placement_values();
  if (spec.values.empty()) throw ConfigError("sweep requires 'values'");
  spec.trials = trials;
  spec.base_seed = seed;
  return spec;
}

Scenario parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError("", line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ParseError("", line_no, "missing key before '='");
    if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end())
      throw ParseError(key, line_no, "unknown key");
    if (value.empty()) throw ParseError(key, line_no, "missing value");
    if (entries.contains(key))
      throw ParseError(key, line_no,
                       "duplicate key (first set on line " + std::to_string(entries[key].line) + ")");
    entries.emplace(key, Entry{value, line_no});
  }

  const Reader r(std::move(entries));
  Scenario s;
  auto& sys = s.system;
  for (const char* key : {"p", "n0", "n", "d1", "d2", "d3", "d4"}) r.require(key);

  sys.p = r.real("p");
  check(sys.p > 0, r, "p", "must be > 0");
  sys.n0 = r.real("n0");
  check(sys.n0 > 0, r, "n0", "must be > 0");
  if (r.has("eta")) sys.eta = r.real("eta");
  check(sys.eta > 0 && sys.eta < 1, r, "eta", "must lie in (0,1)");
  if (r.has("alpha")) sys.alpha = r.real("alpha");
  check(sys.alpha > 0, r, "alpha", "must be > 0");
  const auto n = r.integer("n");
  check(n >= 1 && n <= 10'000'000, r, "n", "must lie in [1, 1e7]");
  sys.n = static_cast<std::uint32_t>(n);
  for (auto [key, field] : {std::pair{"d1", &sys.d1}, std::pair{"d2", &sys.d2},
                            std::pair{"d3", &sys.d3}, std::pair{"d4", &sys.d4}}) {
    *field = r.real(key);
    check(*field > 0, r, key, "distance must be > 0");
  }
  if (r.has("d_sd")) {
    sys.d_sd = r.real("d_sd");
    check(*sys.d_sd > 0, r, "d_sd", "distance must be > 0");
  }

  if (r.has("trials")) {
    const auto t = r.integer("trials");
    check(t >= 1 && t <= 0xffffffffULL, r, "trials", "must lie in [1, 2^32)");
    s.trials = static_cast<std::uint32_t>(t);
  }
  if (r.has("seed")) s.seed = r.integer("seed");

  if (r.has("sweep")) {
    try {
      s.sweep = sweep_variable_from_string(r.text("sweep"));
    } catch (const ConfigError& e) {
      throw ParseError("sweep", r.line("sweep"), e.what());
    }
  }
  if (r.has("values")) {
    check(s.sweep.has_value(), r, "values", "requires a 'sweep' key");
    s.values = r.list("values");
    for (double v : s.values) {
      try {
        sweep_config(s.sweep_spec(), sys, v, v);
      } catch (const ConfigError& e) {
        throw ParseError("values", r.line("values"), e.what());
      }
    }
  }
  if (s.sweep && s.values.empty() && *s.sweep != SweepVariable::placement_grid)
    throw ParseError("values", 0, "required by sweep '" + std::string(to_string(*s.sweep)) + "'");
  return s;
}

Scenario load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_exact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string emit_config(const Scenario& s) {
  const auto& sys = s.system;
  std::ostringstream out;
  out << "p = " << format_exact(sys.p) << '\n'
      << "n0 = " << format_exact(sys.n0) << '\n'
      << "eta = " << format_exact(sys.eta) << '\n'
      << "alpha = " << format_exact(sys.alpha) << '\n'
      << "n = " << sys.n << '\n'
      << "d1 = " << format_exact(sys.d1) << '\n'
      << "d2 = " << format_exact(sys.d2) << '\n'
      << "d3 = " << format_exact(sys.d3) << '\n'
      << "d4 = " << format_exact(sys.d4) << '\n';
  if (sys.d_sd) out << "d_sd = " << format_exact(*sys.d_sd) << '\n';
  out << "trials = " << s.trials << '\n' << "seed = " << s.seed << '\n';
  if (s.sweep) out << "sweep = " << to_string(*s.sweep) << '\n';
  if (!s.values.empty()) {
    out << "values = ";
    for (std::size_t i = 0; i < s.values.size(); ++i)
      out << (i ? ", " : "") << format_exact(s.values[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace wpr
