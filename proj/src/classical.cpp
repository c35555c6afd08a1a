#include "udw/classical.hpp"

#include "radial_integral.hpp"
#include "udw/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace udw {

SpectralPoint spectral_point(double k, double a) { return {k, spectral_A(k, a), spectral_B(k, a)}; }

IntegralValue<double> excitation_classical(double a, double width, const QuadratureSpec& spec) {
  detail::RadialIntegral r{a, 1.0, 0.0, 1, width, detail::SpectralOrder::A};
  return detail::radial_spectral_integral(r, spec).scaled(1.0 / (2.0 * pi * pi));
}

cd entangling_integrand_classical(double k, double a, double s, double width) {
  const double v = a + k;
  const cd r = std::exp(I_unit * (pi * a)) * spectral_B(k, a) / (1.0 - v * v);
  return std::sin(k * s) * std::exp(-0.25 * width * width * k * k) * r;
}

cd entangling_integrand_shell_limit(double a, double s, double width) {
  const double k = 1.0 - a;
  return std::sin(k * s) * std::exp(-0.25 * width * width * k * k) * time_ordered_kernel(a - k, 1.0);
}

IntegralValue<cd> entangling_classical(double a, double s, double width, const QuadratureSpec& spec) {
  if (!(s > 0.0)) throw std::invalid_argument("entangling term needs a positive separation");
  const double k_cut = detail::gaussian_cut(width, spec);
  auto gauss = [&](double k) { return std::exp(-0.25 * width * width * k * k); };

  // Beyond k0 the shells a + k = 1 and |a - k| = 1 are behind us.
  const double k0 = std::ceil(2.0 * a + 2.0) + 0.5 - a;
  const double k_fin = std::min(k0, k_cut);
  QuadratureSpec fin = spec;
  fin.panel_width = std::min(1.0, pi / s);
  std::vector<Exclusion<cd>> shell;
  if (a < 1.0 && 1.0 - a < k_fin) shell.push_back({1.0 - a, entangling_integrand_shell_limit(a, s, width)});
  IntegralValue<cd> out = integrate_finite(
      [&](double k) { return entangling_integrand_classical(k, a, s, width); }, 0.0, k_fin, fin, shell);

  if (k_cut > k0) {
    // e^{i pi a} B/(1-(a+k)^2) = R1 + R2a + R2b with
    //   R1  = e^{i pi a} i(2a+k) h(a)/(2 D+),  R2a = 1/(D- D+),  R2b = e^{i pi a} e^{-i pi k}/(D- D+)
    const cd phase_a = std::exp(I_unit * (pi * a));
    const double h_a = gap_kernel_h(a);
    auto dd = [&](double k) {
      const double dp = 1.0 - (a + k) * (a + k), dm = 1.0 - (a - k) * (a - k);
      return std::pair{dp, dm};
    };
    QuadratureSpec tail = spec;
    tail.panel_width = 0.0;

    // sin(ks) (R1 + R2a): alternating 1/k decay
    auto slow = [&](double k) -> cd {
      auto [dp, dm] = dd(k);
      const cd r = phase_a * I_unit * (2.0 * a + k) * h_a / (2.0 * dp) + 1.0 / (dm * dp);
      return std::sin(k * s) * gauss(k) * r;
    };
    tail.tail_mode = OscillatoryPartition{2.0 * pi / s};
    out += integrate_semi_infinite(slow, tail, k0);

    // sin(ks) e^{-i pi k} = (e^{i(s-pi)k} - e^{-i(s+pi)k})/(2i) times R2b/e^{-i pi k}
    auto amp = [&](double k) -> cd {
      auto [dp, dm] = dd(k);
      return phase_a * gauss(k) / (dm * dp * 2.0 * I_unit);
    };
    for (const double omega : {s - pi, -(s + pi)}) {
      const double sign = omega == s - pi ? 1.0 : -1.0;
      auto piece = [&](double k) -> cd { return sign * amp(k) * std::exp(I_unit * (omega * k)); };
      if (std::abs(omega) < 0.05) tail.tail_mode = AlgebraicDecay{};
      else tail.tail_mode = OscillatoryPartition{2.0 * pi / std::abs(omega)};
      out += integrate_semi_infinite(piece, tail, k0);
    }
  }
  return out.scaled(-1.0 / (2.0 * pi * pi * s));
}

double classical_width(const ScenarioConfig& cfg) {
  if (std::holds_alternative<Pointlike>(cfg.model)) return 0.0;
  if (const auto* s = std::get_if<Smeared>(&cfg.model)) return s->width;
  throw std::invalid_argument("classical quantities need a pointlike or smeared model");
}

double excitation_classical(const ScenarioConfig& cfg, const QuadratureSpec& spec) {
  return require(excitation_classical(cfg.omega, classical_width(cfg), spec));
}

cd entangling_classical(const ScenarioConfig& cfg, const QuadratureSpec& spec) {
  return require(entangling_classical(cfg.omega, cfg.separation, classical_width(cfg), spec));
}

double negativity_classical(const ScenarioConfig& cfg, const QuadratureSpec& spec) {
  const double p = excitation_classical(cfg, spec);
  return negativity({p, p, entangling_classical(cfg, spec)});
}

}  // namespace udw
