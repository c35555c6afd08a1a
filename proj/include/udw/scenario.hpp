#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>

namespace udw {

enum class PathChoice { Exact, Taylor };

struct Pointlike {
  bool operator==(const Pointlike&) const = default;
};

struct Smeared {
  double width;  // L/(c sigma)
  bool operator==(const Smeared&) const = default;
};

struct Delocalized {
  double width;               // L/(c sigma)
  double mass;                // M c sigma
  double speed_ratio = 1.0;   // c_s/c
  PathChoice path = PathChoice::Taylor;
  bool operator==(const Delocalized&) const = default;
};

using ModelVariant = std::variant<Pointlike, Smeared, Delocalized>;

struct ScenarioConfig {
  double omega = 1.0;       // Omega sigma
  double separation = 1.0;  // S/(c sigma)
  ModelVariant model = Pointlike{};
  bool operator==(const ScenarioConfig&) const = default;
};

struct HarvestResult {
  double p_a = 0.0;
  double p_b = 0.0;
  std::complex<double> m{};
  double negativity = 0.0;
  double err_p = 0.0;
  double err_m = 0.0;
  bool converged = true;
};

// Fills the negativity from p_a, p_b and m.
HarvestResult make_result(double p, double err_p, std::complex<double> m, double err_m, bool converged);

enum class RegimeLevel { Ok, Warn, Reject };

struct RegimeVerdict {
  RegimeLevel level = RegimeLevel::Ok;
  std::string message;
  double lmc = 0.0;         // width * mass
  double lmc_s = 0.0;       // width * mass * speed_ratio
  bool supersonic = false;  // lmc_s >= 3.5
};

inline constexpr double regime_reject_below = 35.0;
inline constexpr double regime_warn_below = 350.0;
inline constexpr double supersonic_threshold = 3.5;

RegimeVerdict regime_check(const Delocalized& model);
const char* to_string(RegimeLevel level);

class RegimeRejected : public std::runtime_error {
 public:
  explicit RegimeRejected(const RegimeVerdict& v) : std::runtime_error(v.message), verdict(v) {}
  RegimeVerdict verdict;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument on out-of-domain parameters.
void validate(const ScenarioConfig& cfg);

const char* model_name(const ModelVariant& m);
const char* to_string(PathChoice p);

// Flat key=value configuration. Keys: omega, separation, model, width, mass,
// speed_ratio, path. '#' starts a comment; blank lines are ignored.
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(const std::string& text);
ScenarioConfig scenario_from_map(const ConfigMap& map);
ScenarioConfig parse_config(const std::string& text);
std::string format_config(const ScenarioConfig& cfg);

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);
// Accepts a decimal number or a fraction "p/q".
double parse_number(const std::string& text, const std::string& key);

}  // namespace udw
