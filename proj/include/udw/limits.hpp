#pragma once

// The gamma-regularized limit (L = l gamma, M = m/gamma at fixed L M c) and the
// infinite-mass limit at fixed width.

#include "udw/quadrature.hpp"
#include "udw/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace udw {

struct GammaFamily {
  double lmc;                   // fixed product width * mass
  double l = 1.0;               // width at gamma = 1
  std::vector<double> gammas;   // descending

  double width(double gamma) const { return l * gamma; }
  double mass(double gamma) const { return lmc / (l * gamma); }
};

struct LimitRow {
  double parameter;  // gamma or mass
  double p;
  double abs_m;
  double negativity;
  double err_p;
  double err_m;
  bool converged;
};

struct LimitReference {
  double p;
  double abs_m;
  double negativity;
};

// Empirical order between consecutive rows: log(e_i/e_{i+1}) / log(step ratio).
struct LimitRates {
  std::vector<double> p, abs_m, negativity;
};

struct LimitReport {
  std::string kind;  // "gamma" or "mass"
  std::vector<LimitRow> values;
  LimitReference reference;
  LimitRates rates;
  bool p_error_monotone = true;
  bool abs_m_error_monotone = true;
  double p_final_rel_error = 0.0;
  double abs_m_final_rel_error = 0.0;
};

// P^c_0 + (1/(4 pi^2 lmc^2)) int_0^inf dk k^3 A''(a + k)
IntegralValue<double> gamma_limit_P(double a, double lmc, const QuadratureSpec& spec = {});

LimitReport run_gamma_family(double a, double s, const GammaFamily& family, PathChoice path,
                             const QuadratureSpec& spec = {});

LimitReport mass_limit_check(double a, double s, double width, const std::vector<double>& masses,
                             PathChoice path, const QuadratureSpec& spec = {});

}  // namespace udw
