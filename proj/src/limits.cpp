#include "udw/limits.hpp"

#include "radial_integral.hpp"
#include "udw/classical.hpp"
#include "udw/delocalized.hpp"
#include "udw/entanglement.hpp"

#include <cmath>
#include <stdexcept>

namespace udw {

IntegralValue<double> gamma_limit_P(double a, double lmc, const QuadratureSpec& spec) {
  auto base = excitation_classical(a, 0.0, spec);
  detail::RadialIntegral r{a, 1.0, 0.0, 3, 0.0, detail::SpectralOrder::A2};
  auto corr = detail::radial_spectral_integral(r, spec).scaled(1.0 / (4.0 * pi * pi * lmc * lmc));
  return base + corr;
}

namespace {

LimitRow evaluate(double parameter, double a, double s, const Delocalized& d, const QuadratureSpec& spec) {
  const auto p = excitation_delocalized(a, d, spec);
  const auto m = entangling_delocalized(a, s, d, spec);
  const double n = negativity({p.value, p.value, m.value});
  return {parameter, p.value, std::abs(m.value), n, p.err_estimate, m.err_estimate, p.converged && m.converged};
}

// log-ratio orders; `step` maps a row to the quantity whose ratio measures progress
template <class Get, class Step>
std::vector<double> orders(const std::vector<LimitRow>& rows, double ref, Get get, Step step) {
  std::vector<double> out;
  for (size_t i = 0; i + 1 < rows.size(); ++i) {
    const double e0 = std::abs(get(rows[i]) - ref), e1 = std::abs(get(rows[i + 1]) - ref);
    const double ratio = step(rows[i], rows[i + 1]);
    out.push_back(e0 > 0.0 && e1 > 0.0 ? std::log(e0 / e1) / std::log(ratio) : std::nan(""));
  }
  return out;
}

template <class Get>
bool shrinking(const std::vector<LimitRow>& rows, double ref, Get get) {
  for (size_t i = 0; i + 1 < rows.size(); ++i)
    if (!(std::abs(get(rows[i + 1]) - ref) < std::abs(get(rows[i]) - ref))) return false;
  return true;
}

template <class Step>
void summarize(LimitReport& rep, Step step) {
  const auto getp = [](const LimitRow& r) { return r.p; };
  const auto getm = [](const LimitRow& r) { return r.abs_m; };
  const auto getn = [](const LimitRow& r) { return r.negativity; };
  rep.rates.p = orders(rep.values, rep.reference.p, getp, step);
  rep.rates.abs_m = orders(rep.values, rep.reference.abs_m, getm, step);
  rep.rates.negativity = orders(rep.values, rep.reference.negativity, getn, step);
  rep.p_error_monotone = shrinking(rep.values, rep.reference.p, getp);
  rep.abs_m_error_monotone = shrinking(rep.values, rep.reference.abs_m, getm);
  if (!rep.values.empty()) {
    const auto& last = rep.values.back();
    rep.p_final_rel_error = std::abs(last.p - rep.reference.p) / std::abs(rep.reference.p);
    rep.abs_m_final_rel_error = std::abs(last.abs_m - rep.reference.abs_m) / std::abs(rep.reference.abs_m);
  }
}

}  // namespace

LimitReport run_gamma_family(double a, double s, const GammaFamily& family, PathChoice path,
                             const QuadratureSpec& spec) {
  for (size_t i = 0; i + 1 < family.gammas.size(); ++i)
    if (!(family.gammas[i + 1] < family.gammas[i])) throw std::invalid_argument("gammas must be descending");
  LimitReport rep;
  rep.kind = "gamma";
  for (const double g : family.gammas) {
    Delocalized d{family.width(g), family.mass(g), 1.0, path};
    const auto v = regime_check(d);
    if (v.level == RegimeLevel::Reject) throw RegimeRejected(v);
    rep.values.push_back(evaluate(g, a, s, d, spec));
  }
  const double p_ref = require(gamma_limit_P(a, family.lmc, spec));
  const double m_ref = std::abs(require(entangling_classical(a, s, 0.0, spec)));
  rep.reference = {p_ref, m_ref, negativity({p_ref, p_ref, m_ref})};
  summarize(rep, [](const LimitRow& x, const LimitRow& y) { return x.parameter / y.parameter; });
  return rep;
}

LimitReport mass_limit_check(double a, double s, double width, const std::vector<double>& masses, PathChoice path,
                             const QuadratureSpec& spec) {
  for (size_t i = 0; i + 1 < masses.size(); ++i)
    if (!(masses[i + 1] > masses[i])) throw std::invalid_argument("masses must be ascending");
  LimitReport rep;
  rep.kind = "mass";
  for (const double m : masses) rep.values.push_back(evaluate(m, a, s, Delocalized{width, m, 1.0, path}, spec));
  const double p_ref = require(excitation_classical(a, 0.0, spec));
  const double m_ref = std::abs(require(entangling_classical(a, s, width, spec)));
  rep.reference = {p_ref, m_ref, negativity({p_ref, p_ref, m_ref})};
  summarize(rep, [](const LimitRow& x, const LimitRow& y) { return y.parameter / x.parameter; });
  return rep;
}

}  // namespace udw
