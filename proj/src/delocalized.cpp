#include "udw/delocalized.hpp"

#include "radial_integral.hpp"
#include "udw/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace udw {

namespace {

detail::RadialIntegral zero_momentum(const TemplateArgs& args, int power, detail::SpectralOrder order) {
  return {args.a, args.speed_ratio, 0.5 / args.mass, power, 0.0, order};
}

void check_regime(const Delocalized& d) {
  const auto v = regime_check(d);
  if (v.level == RegimeLevel::Reject) throw RegimeRejected(v);
}

}  // namespace

IntegralValue<double> template_U_slice(double p, double z, const TemplateArgs& args, const QuadratureSpec& spec) {
  detail::RadialIntegral r = zero_momentum(args, 1, detail::SpectralOrder::A);
  r.c = args.speed_ratio - p * z / args.mass;
  return detail::radial_spectral_integral(r, spec);
}

IntegralValue<double> template_U(double p, const TemplateArgs& args, const QuadratureSpec& spec) {
  const QuadratureSpec inner = spec.tightened(10.0);
  if (p == 0.0) return template_U_slice(0.0, 0.0, args, inner).scaled(2.0);
  long inner_evals = 0;
  bool inner_ok = true;
  auto slice = [&](double z) {
    auto v = template_U_slice(p, z, args, inner);
    inner_evals += v.evaluations;
    inner_ok = inner_ok && v.converged;
    return v.value;
  };
  QuadratureSpec outer = spec;
  outer.panel_width = 0.0;
  auto out = integrate_finite(slice, -1.0, 1.0, outer);
  out.evaluations = inner_evals;
  out.converged = out.converged && inner_ok;
  return out;
}

cd template_V_printed(double k, double p1, double p2, const TemplateArgs& args) {
  const double alpha = args.a - k * (p1 - p2) / (2.0 * args.mass);
  const double shift = k * (p1 + p2) / (2.0 * args.mass);
  return time_ordered_kernel_printed(alpha, args.speed_ratio * k + shift) +
         time_ordered_kernel_printed(alpha, args.speed_ratio * k - shift);
}

IntegralValue<double> d2_template_U(const TemplateArgs& args, const QuadratureSpec& spec) {
  const double m = args.mass;
  return detail::radial_spectral_integral(zero_momentum(args, 3, detail::SpectralOrder::A2), spec)
      .scaled(2.0 / (3.0 * m * m));
}

double d2_template_U_fd(const TemplateArgs& args, double h, const QuadratureSpec& spec) {
  const double u0 = require(template_U(0.0, args, spec));
  auto second = [&](double step) {
    const double up = require(template_U(step, args, spec));
    const double um = require(template_U(-step, args, spec));
    return (up - 2.0 * u0 + um) / (step * step);
  };
  const double coarse = second(h), fine = second(0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

std::pair<cd, cd> d2_template_V(double k, const TemplateArgs& args) {
  using J = Jet<double, 2>;
  const cd v11 = template_V(J(k), J::variable(0.0), J(0.0), args).derivative(2);
  const cd v22 = template_V(J(k), J(0.0), J::variable(0.0), args).derivative(2);
  return {v11, v22};
}

double d2_template_V_default_step(double k, const TemplateArgs& args) {
  return 1e-3 * args.mass / std::max(1.0, k);
}

std::pair<cd, cd> d2_template_V_fd(double k, const TemplateArgs& args, double h) {
  const cd v0 = template_V(k, 0.0, 0.0, args);
  auto second = [&](double step, bool first) {
    const double d1 = first ? step : 0.0, d2 = first ? 0.0 : step;
    return (template_V(k, d1, d2, args) - 2.0 * v0 + template_V(k, -d1, -d2, args)) / (step * step);
  };
  auto richardson = [&](bool first) { return (4.0 * second(0.5 * h, first) - second(h, first)) / 3.0; };
  return {richardson(true), richardson(false)};
}

TaylorParts<double> excitation_taylor(double a, const Delocalized& d, const QuadratureSpec& spec) {
  const TemplateArgs args{a, d.mass, d.speed_ratio};
  const double norm = 1.0 / (4.0 * pi * pi * d.speed_ratio);
  TaylorParts<double> parts;
  parts.leading =
      detail::radial_spectral_integral(zero_momentum(args, 1, detail::SpectralOrder::A), spec).scaled(2.0 * norm);
  parts.correction = d2_template_U(args, spec).scaled(norm * 3.0 / (2.0 * d.width * d.width));
  return parts;
}

TaylorParts<cd> entangling_taylor(double a, double s, const Delocalized& d, const QuadratureSpec& spec) {
  if (!(s > 0.0)) throw std::invalid_argument("entangling term needs a positive separation");
  const TemplateArgs args{a, d.mass, d.speed_ratio};
  const double l2 = d.width * d.width;
  const double r = d.speed_ratio;
  auto envelope = [&](double k) { return std::sin(k * s) / s * std::exp(-0.25 * l2 * k * k); };

  QuadratureSpec q = spec;
  q.tail_mode = GaussianDamped{2.0 / d.width};
  q.panel_width = std::min({1.0, pi / s, 1.0 / r});
  TaylorParts<cd> parts;
  parts.leading = integrate_semi_infinite(
      [&](double k) { return envelope(k) * time_ordered_kernel(a - r * k, a + r * k) * 2.0; }, q);
  parts.correction = integrate_semi_infinite(
      [&](double k) {
        auto [v11, v22] = d2_template_V(k, args);
        return envelope(k) * (v11 + v22) / (2.0 * l2);
      },
      q);
  const double norm = 1.0 / (4.0 * pi * pi * r);
  parts.leading = parts.leading.scaled(norm);
  parts.correction = parts.correction.scaled(norm);
  return parts;
}

IntegralValue<double> excitation_exact(double a, const Delocalized& d, const QuadratureSpec& spec) {
  const TemplateArgs args{a, d.mass, d.speed_ratio};
  const double l = d.width;
  const QuadratureSpec inner = spec.tightened(10.0);
  long inner_evals = 0;
  bool inner_ok = true;
  auto radial = [&](double p) {
    auto u = template_U(p, args, inner);
    inner_evals += u.evaluations;
    inner_ok = inner_ok && u.converged;
    return p * p * std::exp(-0.5 * l * l * p * p) * u.value;
  };
  QuadratureSpec outer = spec;
  outer.tail_mode = GaussianDamped{std::sqrt(2.0) / l};
  outer.panel_width = 0.0;
  auto out = integrate_semi_infinite(radial, outer);
  out.evaluations = inner_evals;
  out.converged = out.converged && inner_ok;
  const double density = l * l * l / std::pow(2.0 * pi, 1.5);
  return out.scaled(density / (pi * d.speed_ratio));
}

IntegralValue<cd> entangling_exact(double a, double s, const Delocalized& d, const QuadratureSpec& spec) {
  if (!(s > 0.0)) throw std::invalid_argument("entangling term needs a positive separation");
  const TemplateArgs args{a, d.mass, d.speed_ratio};
  const double l = d.width, l2 = l * l;
  const double p_max = 6.0 / l;
  const double k_max = 6.0 * std::sqrt(2.0) / l;

  QuadratureSpec outer = spec;
  outer.panel_width = 0.0;
  QuadratureSpec middle = outer.tightened(5.0);
  QuadratureSpec inner = spec.tightened(25.0);
  inner.panel_width = std::min({1.0, pi / s, 1.0 / d.speed_ratio});

  long evals = 0;
  bool ok = true;
  auto k_integral = [&](double p1, double p2) {
    auto v = integrate_finite(
        [&](double k) { return std::sin(k * s) / s * std::exp(-0.25 * l2 * k * k) * template_V(k, p1, p2, args); },
        0.0, k_max, inner);
    evals += v.evaluations;
    ok = ok && v.converged;
    return v.value;
  };
  auto p2_integral = [&](double p1) {
    auto v = integrate_finite(
        [&](double p2) { return std::exp(-0.5 * l2 * p2 * p2) * k_integral(p1, p2); }, -p_max, p_max, middle);
    ok = ok && v.converged;
    return v.value;
  };
  auto out = integrate_finite([&](double p1) { return std::exp(-0.5 * l2 * p1 * p1) * p2_integral(p1); },
                              -p_max, p_max, outer);
  out.evaluations = evals;
  out.converged = out.converged && ok;
  return out.scaled(l2 / (8.0 * pi * pi * pi * d.speed_ratio));
}

IntegralValue<double> excitation_delocalized(double a, const Delocalized& d, const QuadratureSpec& spec) {
  check_regime(d);
  if (d.path == PathChoice::Exact) return excitation_exact(a, d, spec);
  return excitation_taylor(a, d, spec).total();
}

IntegralValue<cd> entangling_delocalized(double a, double s, const Delocalized& d, const QuadratureSpec& spec) {
  check_regime(d);
  if (d.path == PathChoice::Exact) return entangling_exact(a, s, d, spec);
  return entangling_taylor(a, s, d, spec).total();
}

const Delocalized& delocalized_model(const ScenarioConfig& cfg) {
  const auto* d = std::get_if<Delocalized>(&cfg.model);
  if (!d) throw std::invalid_argument("delocalized quantities need a delocalized model");
  return *d;
}

double excitation_delocalized(const ScenarioConfig& cfg, PathChoice path, const QuadratureSpec& spec) {
  Delocalized d = delocalized_model(cfg);
  d.path = path;
  return require(excitation_delocalized(cfg.omega, d, spec));
}

cd entangling_delocalized(const ScenarioConfig& cfg, PathChoice path, const QuadratureSpec& spec) {
  Delocalized d = delocalized_model(cfg);
  d.path = path;
  return require(entangling_delocalized(cfg.omega, cfg.separation, d, spec));
}

double negativity_delocalized(const ScenarioConfig& cfg, PathChoice path, const QuadratureSpec& spec) {
  const double p = excitation_delocalized(cfg, path, spec);
  return negativity({p, p, entangling_delocalized(cfg, path, spec)});
}

}  // namespace udw
