#pragma once

// Parameter grids over scenario configurations and their CSV form.

#include "udw/quadrature.hpp"
#include "udw/scenario.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace udw {

inline constexpr const char* version_string = "0.1.0";

struct Axis {
  std::string name;  // omega, separation, width, mass or speed_ratio
  std::vector<double> values;
};

bool is_sweepable(const std::string& name);

// "name=start:stop:count" (linear), "name=start:stop:count:log" or "name=v1,v2,...".
Axis parse_axis(const std::string& text);
Axis linear_axis(const std::string& name, double start, double stop, int count);
Axis log_axis(const std::string& name, double start, double stop, int count);

// Sets one named parameter. Width, mass and speed_ratio promote the model as
// needed (width on a pointlike model makes it smeared). Throws ConfigError.
void apply_parameter(ScenarioConfig& cfg, const std::string& name, double value);

// A column computed per cell next to the standard ones.
struct ExtraColumn {
  std::string name;
  std::function<double(const ScenarioConfig&)> eval;
};

struct SweepRequest {
  Axis x;
  std::optional<Axis> y;
  ScenarioConfig base;
  // When set, mass follows lmc / width in every cell.
  std::optional<double> lmc;
  QuadratureSpec spec;
  unsigned jobs = 0;  // 0: hardware concurrency
  std::vector<ExtraColumn> extras;
};

struct SweepGrid {
  Axis x;
  std::optional<Axis> y;
  std::vector<std::pair<std::string, std::string>> fixed;
  std::vector<ScenarioConfig> configs;  // row-major, x outer
  std::vector<HarvestResult> results;
  std::vector<std::string> extra_names;
  std::vector<std::vector<double>> extras;  // per cell
  std::vector<std::string> errors;          // per cell, empty when fine
  QuadratureSpec spec;
  std::string timestamp;

  size_t ny() const { return y ? y->values.size() : 1; }
  size_t index(size_t i, size_t j = 0) const { return i * ny() + j; }
  const HarvestResult& at(size_t i, size_t j = 0) const { return results[index(i, j)]; }
  size_t failures() const;
};

// Cells that fail to converge or are regime-rejected are kept with
// converged = false; other errors from the base configuration propagate.
SweepGrid run_sweep(const SweepRequest& request);

// Runs f(0..n-1) on up to `jobs` threads.
void parallel_for(size_t n, unsigned jobs, const std::function<void(size_t)>& f);
unsigned default_jobs();

// Two comment lines (timestamp and tool metadata, then fixed parameters),
// a header, one row per cell. Numbers carry 12 significant digits.
void write_csv(const SweepGrid& grid, std::ostream& out);
std::string format_csv_number(double x);

}  // namespace udw
