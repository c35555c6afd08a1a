#include "udw/scenario.hpp"

#include "udw/entanglement.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace udw {

HarvestResult make_result(double p, double err_p, std::complex<double> m, double err_m, bool converged) {
  HarvestResult r;
  r.p_a = p;
  r.p_b = p;
  r.m = m;
  r.err_p = err_p;
  r.err_m = err_m;
  r.converged = converged;
  r.negativity = negativity({r.p_a, r.p_b, r.m});
  return r;
}

RegimeVerdict regime_check(const Delocalized& model) {
  RegimeVerdict v;
  v.lmc = model.width * model.mass;
  v.lmc_s = v.lmc * model.speed_ratio;
  v.supersonic = v.lmc_s >= supersonic_threshold;
  std::ostringstream msg;
  if (v.lmc < regime_reject_below) {
    v.level = RegimeLevel::Reject;
    msg << "width*mass = " << v.lmc << " is below " << regime_reject_below
        << "; the non-relativistic packet expansion does not apply";
  } else if (v.lmc < regime_warn_below) {
    v.level = RegimeLevel::Warn;
    msg << "width*mass = " << v.lmc << " is below " << regime_warn_below
        << "; packet velocities are only marginally non-relativistic";
  }
  if (v.supersonic) {
    if (!msg.str().empty()) msg << "; ";
    msg << "width*mass*speed_ratio = " << v.lmc_s << " >= " << supersonic_threshold
        << " (supersonic virtual velocities)";
  }
  v.message = msg.str();
  return v;
}

const char* to_string(RegimeLevel level) {
  switch (level) {
    case RegimeLevel::Ok: return "ok";
    case RegimeLevel::Warn: return "warn";
    case RegimeLevel::Reject: return "reject";
  }
  return "?";
}

const char* to_string(PathChoice p) { return p == PathChoice::Exact ? "exact" : "taylor"; }

const char* model_name(const ModelVariant& m) {
  if (std::holds_alternative<Pointlike>(m)) return "pointlike";
  if (std::holds_alternative<Smeared>(m)) return "smeared";
  return "delocalized";
}

void validate(const ScenarioConfig& cfg) {
  auto fail = [](const std::string& s) { throw std::invalid_argument(s); };
  if (!(cfg.omega > 0.0) || !std::isfinite(cfg.omega)) fail("omega must be positive");
  if (!(cfg.separation >= 0.0) || !std::isfinite(cfg.separation)) fail("separation must be non-negative");
  if (const auto* s = std::get_if<Smeared>(&cfg.model)) {
    if (!(s->width > 0.0) || !std::isfinite(s->width)) fail("width must be positive");
  }
  if (const auto* d = std::get_if<Delocalized>(&cfg.model)) {
    if (!(d->width > 0.0) || !std::isfinite(d->width)) fail("width must be positive");
    if (!(d->mass > 0.0) || !std::isfinite(d->mass)) fail("mass must be positive");
    if (!(d->speed_ratio > 0.0 && d->speed_ratio <= 1.0)) fail("speed_ratio must lie in (0, 1]");
  }
}

std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, end);
}

double parse_number(const std::string& text, const std::string& key) {
  auto parse_one = [&](const std::string& s) {
    double v = 0.0;
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || s.empty())
      throw ConfigError("value for '" + key + "' is not a number: '" + text + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return parse_one(text);
  const double den = parse_one(text.substr(slash + 1));
  if (den == 0.0) throw ConfigError("value for '" + key + "' divides by zero");
  return parse_one(text.substr(0, slash)) / den;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const char* const known_keys[] = {"omega", "separation", "model", "width", "mass", "speed_ratio", "path"};

bool is_known(const std::string& key) {
  for (const char* k : known_keys)
    if (key == k) return true;
  return false;
}

}  // namespace

ConfigMap parse_config_text(const std::string& text) {
  ConfigMap map;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (!is_known(key)) throw ConfigError("unknown key '" + key + "' on line " + std::to_string(lineno));
    if (value.empty()) throw ConfigError("empty value for '" + key + "'");
    map[key] = value;
  }
  return map;
}

ScenarioConfig scenario_from_map(const ConfigMap& map) {
  for (const auto& [k, v] : map)
    if (!is_known(k)) throw ConfigError("unknown key '" + k + "'");
  auto number = [&](const char* key) -> double {
    auto it = map.find(key);
    if (it == map.end()) throw ConfigError(std::string("missing key '") + key + "'");
    return parse_number(it->second, key);
  };
  auto has = [&](const char* key) { return map.count(key) > 0; };

  ScenarioConfig cfg;
  cfg.omega = number("omega");
  cfg.separation = number("separation");
  const std::string model = has("model") ? map.at("model") : "pointlike";
  if (model == "pointlike") {
    cfg.model = Pointlike{};
  } else if (model == "smeared") {
    cfg.model = Smeared{number("width")};
  } else if (model == "delocalized") {
    Delocalized d{number("width"), number("mass")};
    if (has("speed_ratio")) d.speed_ratio = number("speed_ratio");
    if (has("path")) {
      const std::string& p = map.at("path");
      if (p == "exact") d.path = PathChoice::Exact;
      else if (p == "taylor") d.path = PathChoice::Taylor;
      else throw ConfigError("path must be 'exact' or 'taylor', got '" + p + "'");
    }
    cfg.model = d;
  } else {
    throw ConfigError("model must be pointlike, smeared or delocalized, got '" + model + "'");
  }
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ScenarioConfig parse_config(const std::string& text) { return scenario_from_map(parse_config_text(text)); }

std::string format_config(const ScenarioConfig& cfg) {
  std::ostringstream out;
  out << "omega=" << format_double(cfg.omega) << '\n';
  out << "separation=" << format_double(cfg.separation) << '\n';
  out << "model=" << model_name(cfg.model) << '\n';
  if (const auto* s = std::get_if<Smeared>(&cfg.model)) {
    out << "width=" << format_double(s->width) << '\n';
  } else if (const auto* d = std::get_if<Delocalized>(&cfg.model)) {
    out << "width=" << format_double(d->width) << '\n';
    out << "mass=" << format_double(d->mass) << '\n';
    out << "speed_ratio=" << format_double(d->speed_ratio) << '\n';
    out << "path=" << to_string(d->path) << '\n';
  }
  return out.str();
}

}  // namespace udw
