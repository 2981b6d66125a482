#include "waveheat/config.hpp"

#include "waveheat/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace waveheat {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_number(const std::string& text, int line) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("empty numeric value", line);
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || !std::isfinite(v))
    throw ConfigError("malformed number '" + t + "'", line);
  return v;
}

long parse_int(const std::string& text, int line) {
  const double v = parse_number(text, line);
  const long r = static_cast<long>(v);
  if (static_cast<double>(r) != v)
    throw ConfigError("expected an integer, got '" + trim(text) + "'", line);
  return r;
}

std::vector<double> parse_float_list(const std::string& text, int line) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(item, line));
  if (out.empty()) throw ConfigError("empty list", line);
  return out;
}

struct RawEntry {
  std::string value;
  int line = 0;
};

}  // namespace

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");

  std::map<std::string, RawEntry> entries;  // "section.key" -> value
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw ConfigError("malformed section header", lineno);
      section = trim(t.substr(1, t.size() - 2));
      if (section != "params" && section != "grid" && section != "ic" &&
          section != "experiment")
        throw ConfigError("unknown section [" + section + "]", lineno);
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("expected key = value", lineno);
    if (section.empty()) throw ConfigError("key outside any [section]", lineno);
    const std::string key = trim(t.substr(0, eq));
    entries[section + "." + key] = {trim(t.substr(eq + 1)), lineno};
  }

  static const char* known[] = {
      "params.a",        "params.b",       "params.c",          "params.d",
      "params.epsilon",  "params.mu",      "grid.nx",           "grid.dt",
      "grid.t_final",    "grid.record_stride", "ic.u0",         "ic.u1",
      "ic.p0",           "experiment.eps_list", "experiment.trials",
      "experiment.seed", "experiment.burn_in"};
  for (const auto& [key, entry] : entries) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError("unknown key '" + key + "'", entry.line);
  }

  auto get = [&](const std::string& key) -> std::optional<RawEntry> {
    const auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  };
  auto require = [&](const std::string& key) -> RawEntry {
    const auto e = get(key);
    if (!e) throw ConfigError("missing required key '" + key + "'");
    return *e;
  };

  RunConfig rc;
  for (const char* k : {"a", "b", "c", "d", "epsilon", "mu"}) {
    const RawEntry e = require(std::string("params.") + k);
    const double v = parse_number(e.value, e.line);
    if (std::string(k) == "a") rc.params.a = v;
    else if (std::string(k) == "b") rc.params.b = v;
    else if (std::string(k) == "c") rc.params.c = v;
    else if (std::string(k) == "d") rc.params.d = v;
    else if (std::string(k) == "epsilon") rc.params.epsilon = v;
    else rc.params.mu = v;
  }
  if (!(rc.params.epsilon > 0.0))
    throw ConfigError("params.epsilon must be > 0", get("params.epsilon")->line);
  if (!(rc.params.mu > 0.0))
    throw ConfigError("params.mu must be > 0", get("params.mu")->line);

  if (const auto e = get("grid.nx")) {
    rc.nx = static_cast<int>(parse_int(e->value, e->line));
    if (rc.nx < 8) throw ConfigError("grid.nx must be >= 8", e->line);
  }
  rc.dt = 0.5 / rc.nx;
  if (const auto e = get("grid.dt")) {
    rc.dt = parse_number(e->value, e->line);
    if (!(rc.dt > 0.0)) throw ConfigError("grid.dt must be > 0", e->line);
  }
  if (const auto e = get("grid.t_final")) {
    rc.t_final = parse_number(e->value, e->line);
    if (!(rc.t_final > 0.0)) throw ConfigError("grid.t_final must be > 0", e->line);
  }
  if (const auto e = get("grid.record_stride")) {
    rc.record_stride = static_cast<int>(parse_int(e->value, e->line));
    if (rc.record_stride < 1) throw ConfigError("grid.record_stride must be >= 1", e->line);
  }

  if (const auto e = get("ic.u0")) rc.u0 = e->value;
  if (const auto e = get("ic.u1")) rc.u1 = e->value;
  if (const auto e = get("ic.p0")) rc.p0 = e->value;
  // fail early on malformed presets
  parse_ic_preset(rc.u0, InitialConditionSpec::Target::u0);
  parse_ic_preset(rc.u1, InitialConditionSpec::Target::u1);
  parse_ic_preset(rc.p0, InitialConditionSpec::Target::p0);

  if (const auto e = get("experiment.eps_list"))
    rc.eps_list = parse_float_list(e->value, e->line);
  if (const auto e = get("experiment.trials")) {
    rc.trials = parse_int(e->value, e->line);
    if (rc.trials < 1) throw ConfigError("experiment.trials must be >= 1", e->line);
  }
  if (const auto e = get("experiment.seed")) {
    const long s = parse_int(e->value, e->line);
    if (s < 0) throw ConfigError("experiment.seed must be >= 0", e->line);
    rc.seed = static_cast<std::uint64_t>(s);
  }
  if (const auto e = get("experiment.burn_in")) {
    rc.burn_in = parse_number(e->value, e->line);
    if (rc.burn_in < 0.0 || rc.burn_in >= 1.0)
      throw ConfigError("experiment.burn_in must be in [0, 1)", e->line);
  }
  return rc;
}

InitialConditionSpec parse_ic_preset(const std::string& text,
                                     InitialConditionSpec::Target target) {
  std::stringstream ss(trim(text));
  std::string kind;
  ss >> kind;
  InitialConditionSpec spec;
  spec.target = target;
  auto next_number = [&](const char* what) {
    std::string tok;
    if (!(ss >> tok)) throw ConfigError(std::string("ic preset '") + text + "': missing " + what);
    return parse_number(tok, 0);
  };
  if (kind == "zero") {
    spec.kind = InitialConditionSpec::Kind::zero;
  } else if (kind == "sine") {
    spec.kind = InitialConditionSpec::Kind::sine;
    const double k = next_number("wavenumber");
    spec.wavenumber = static_cast<int>(k);
    if (spec.wavenumber < 1 || static_cast<double>(spec.wavenumber) != k)
      throw ConfigError("ic preset 'sine': wavenumber must be a positive integer");
  } else if (kind == "poly") {
    spec.kind = InitialConditionSpec::Kind::poly;
    std::string tok;
    while (ss >> tok) spec.coefficients.push_back(parse_number(tok, 0));
    if (spec.coefficients.empty())
      throw ConfigError("ic preset 'poly': needs at least one coefficient");
  } else if (kind == "gauss") {
    spec.kind = InitialConditionSpec::Kind::gauss;
    spec.center = next_number("center");
    spec.width = next_number("width");
    spec.amplitude = next_number("amplitude");
    if (!(spec.width > 0.0)) throw ConfigError("ic preset 'gauss': width must be > 0");
  } else {
    throw ConfigError("unknown ic preset '" + kind + "'");
  }
  std::string extra;
  if (ss >> extra) throw ConfigError("ic preset '" + text + "': trailing token '" + extra + "'");
  return spec;
}

SimulationConfig simulation_config(const RunConfig& rc) {
  SimulationConfig cfg;
  cfg.params = rc.params;
  cfg.grid = SpatialGrid(rc.nx);
  cfg.dt = rc.dt;
  cfg.t_final = rc.t_final;
  cfg.record_stride = rc.record_stride;
  return cfg;
}

std::vector<InitialConditionSpec> ic_specs(const RunConfig& rc) {
  return {parse_ic_preset(rc.u0, InitialConditionSpec::Target::u0),
          parse_ic_preset(rc.u1, InitialConditionSpec::Target::u1),
          parse_ic_preset(rc.p0, InitialConditionSpec::Target::p0)};
}

}  // namespace waveheat
