#include "radial_integral.hpp"

#include "udw/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace udw::detail {

namespace {

// Below this slope the k -> x map is too stretched; integrate in k instead.
constexpr double min_slope = 0.05;

double g_value(SpectralOrder o, double x) {
  return o == SpectralOrder::A ? spectral_A_at(x) : spectral_A_d2_at(x);
}

double g_shell(SpectralOrder o) {
  return o == SpectralOrder::A ? pi * pi / 8.0 : spectral_A_d2_shell;
}

}  // namespace

double gaussian_cut(double width, const QuadratureSpec& spec) {
  if (width <= 0.0) return std::numeric_limits<double>::infinity();
  return (2.0 / width) * std::sqrt(std::log(100.0 / spec.abs_tol));
}

IntegralValue<double> radial_spectral_integral(const RadialIntegral& r, const QuadratureSpec& spec) {
  const double k_cut = gaussian_cut(r.width, spec);
  auto envelope = [&](double k) {
    const double w = std::pow(k, r.power);
    return r.width > 0.0 ? w * std::exp(-0.25 * r.width * r.width * k * k) : w;
  };
  auto G = [&](double k) { return r.a + r.c * k + r.inv_2m * k * k; };

  QuadratureSpec fin = spec;
  fin.panel_width = 0.0;
  IntegralValue<double> out;

  double k1 = 0.0;
  if (r.c < min_slope) {
    if (r.inv_2m <= 0.0) throw std::invalid_argument("radial integral: G must increase at large k");
    k1 = (min_slope - r.c) / (2.0 * r.inv_2m);
    const double k_end = std::min(k1, k_cut);
    fin.panel_width = 1.0 / std::max(min_slope, std::abs(r.c));
    out += integrate_finite([&](double k) { return envelope(k) * g_value(r.order, G(k)); }, 0.0, k_end, fin);
    fin.panel_width = 0.0;
    if (k1 >= k_cut) return out;
  }

  // x-substitution beyond k1: x = G(k), dk = dx/G'(k)
  const double x1 = G(k1);
  const double g1 = r.c + 2.0 * r.inv_2m * k1;
  auto slope_at = [&](double x) { return std::sqrt(g1 * g1 + 4.0 * r.inv_2m * (x - x1)); };
  auto k_of = [&](double x) { return k1 + 2.0 * (x - x1) / (g1 + slope_at(x)); };
  auto weight = [&](double x) { return envelope(k_of(x)) / slope_at(x); };
  const double x_cut = std::isfinite(k_cut) ? G(k_cut) : std::numeric_limits<double>::infinity();

  const double X0 = std::ceil(std::max(x1, 1.0)) + 2.5;
  const double x_fin = std::min(X0, x_cut);
  std::vector<Exclusion<double>> shell;
  if (x1 < 1.0 && x_fin > 1.0) shell.push_back({1.0, weight(1.0) * g_shell(r.order)});
  out += integrate_finite([&](double x) { return weight(x) * g_value(r.order, x); }, x1, x_fin, fin, shell);
  if (x_cut <= X0) return out;

  // Tail: split g into a smooth algebraic part and an oscillating part.
  auto smooth = [&](double x) {
    const double d = x * x - 1.0;
    if (r.order == SpectralOrder::A) return weight(x) / (d * d);
    return weight(x) * (20.0 * x * x + 4.0) / (d * d * d * d);
  };
  auto wave = [&](double x) {
    const double d = x * x - 1.0;
    const double c = std::cos(pi * x);
    if (r.order == SpectralOrder::A) return weight(x) * c / (d * d);
    const double s = std::sin(pi * x);
    const double poly = 20.0 * x * x + 4.0;
    return weight(x) * ((poly - pi * pi * d * d) * c + 8.0 * pi * x * d * s) / (d * d * d * d);
  };
  if (std::isfinite(x_cut)) {
    out += integrate_finite(smooth, X0, x_cut, fin);
  } else {
    QuadratureSpec alg = fin;
    alg.tail_mode = AlgebraicDecay{};
    out += integrate_semi_infinite(smooth, alg, X0);
  }
  QuadratureSpec osc = fin;
  osc.tail_mode = OscillatoryPartition{2.0};
  out += integrate_semi_infinite(wave, osc, X0);
  return out;
}

}  // namespace udw::detail
