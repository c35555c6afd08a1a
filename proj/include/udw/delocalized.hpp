#pragma once

// Detectors whose centers of mass are Gaussian wave packets of width L and
// mass M, optionally in a medium with wave speed c_s = r c.

#include "udw/kernels.hpp"
#include "udw/quadrature.hpp"
#include "udw/scenario.hpp"

#include <complex>
#include <utility>

namespace udw {

struct TemplateArgs {
  double a;                  // Omega sigma
  double mass;               // M c sigma
  double speed_ratio = 1.0;  // c_s/c
};

// U(p) = int_{-1}^{1} dz int_0^inf dk k A(G),  G = a + r k + k^2/(2m) - k p z/m
IntegralValue<double> template_U(double p, const TemplateArgs& args, const QuadratureSpec& spec = {});
// inner k-integral of U at fixed z
IntegralValue<double> template_U_slice(double p, double z, const TemplateArgs& args,
                                       const QuadratureSpec& spec = {});

// V(k, p1, p2) = sum_j T(alpha - beta_j, alpha + beta_j),
// alpha = a - k(p1 - p2)/(2m),  beta_j = r k + (-1)^j k (p1 + p2)/(2m).
template <class S>
complexify_t<S> template_V(const S& k, const S& p1, const S& p2, const TemplateArgs& args) {
  const S alpha = args.a - k * (p1 - p2) / (2.0 * args.mass);
  const S shift = k * (p1 + p2) / (2.0 * args.mass);
  const S beta0 = args.speed_ratio * k + shift;
  const S beta1 = args.speed_ratio * k - shift;
  return time_ordered_kernel(S(alpha - beta0), S(alpha + beta0)) +
         time_ordered_kernel(S(alpha - beta1), S(alpha + beta1));
}

// Same sum evaluated from the printed closed form (singular on alpha + beta_j = +-1).
std::complex<double> template_V_printed(double k, double p1, double p2, const TemplateArgs& args);

// d^2U/dp^2 at p = 0 = (2/(3 m^2)) int_0^inf dk k^3 A''(F)
IntegralValue<double> d2_template_U(const TemplateArgs& args, const QuadratureSpec& spec = {});
// Richardson-extrapolated central difference of template_U with step h
double d2_template_U_fd(const TemplateArgs& args, double h, const QuadratureSpec& spec = {});

// (d^2V/dp1^2, d^2V/dp2^2) at p1 = p2 = 0, by second-order jets
std::pair<std::complex<double>, std::complex<double>> d2_template_V(double k, const TemplateArgs& args);
// same by Richardson-extrapolated central differences, step h in p
std::pair<std::complex<double>, std::complex<double>> d2_template_V_fd(double k, const TemplateArgs& args,
                                                                       double h);
double d2_template_V_default_step(double k, const TemplateArgs& args);

template <class T>
struct TaylorParts {
  IntegralValue<T> leading;     // zero-momentum template term
  IntegralValue<T> correction;  // second-derivative term
  IntegralValue<T> total() const { return leading + correction; }
};

// (1/(4 pi^2 r)) [U(0) + (3/(2 l^2)) U''(0)]
TaylorParts<double> excitation_taylor(double a, const Delocalized& d, const QuadratureSpec& spec = {});
// (1/(4 pi^2 r)) int dk (sin ks/s) e^{-l^2 k^2/4} [V(k,0,0) + (V_11 + V_22)/(2 l^2)]
TaylorParts<std::complex<double>> entangling_taylor(double a, double s, const Delocalized& d,
                                                    const QuadratureSpec& spec = {});

// (1/(pi r)) int_0^inf dp p^2 |phi(p)|^2 U(p),  |phi|^2 = l^3/(2 pi)^{3/2} e^{-p^2 l^2/2}
IntegralValue<double> excitation_exact(double a, const Delocalized& d, const QuadratureSpec& spec = {});
// (l^2/(8 pi^3 r)) int dp1 dp2 dk (sin ks/s) e^{-l^2(p1^2+p2^2)/2} e^{-l^2 k^2/4} V(k,p1,p2)
IntegralValue<std::complex<double>> entangling_exact(double a, double s, const Delocalized& d,
                                                     const QuadratureSpec& spec = {});

// Path dispatch; throw RegimeRejected when regime_check rejects the model.
IntegralValue<double> excitation_delocalized(double a, const Delocalized& d, const QuadratureSpec& spec = {});
IntegralValue<std::complex<double>> entangling_delocalized(double a, double s, const Delocalized& d,
                                                           const QuadratureSpec& spec = {});

const Delocalized& delocalized_model(const ScenarioConfig& cfg);
double excitation_delocalized(const ScenarioConfig& cfg, PathChoice path, const QuadratureSpec& spec = {});
std::complex<double> entangling_delocalized(const ScenarioConfig& cfg, PathChoice path,
                                            const QuadratureSpec& spec = {});
double negativity_delocalized(const ScenarioConfig& cfg, PathChoice path, const QuadratureSpec& spec = {});

}  // namespace udw
