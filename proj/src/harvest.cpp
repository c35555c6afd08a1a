#include "udw/harvest.hpp"

#include "udw/classical.hpp"
#include "udw/delocalized.hpp"

namespace udw {

IntegralValue<double> compute_excitation(const ScenarioConfig& cfg, const QuadratureSpec& spec) {
  validate(cfg);
  if (const auto* d = std::get_if<Delocalized>(&cfg.model)) return excitation_delocalized(cfg.omega, *d, spec);
  return excitation_classical(cfg.omega, classical_width(cfg), spec);
}

IntegralValue<cd> compute_entangling(const ScenarioConfig& cfg, const QuadratureSpec& spec) {
  validate(cfg);
  if (const auto* d = std::get_if<Delocalized>(&cfg.model))
    return entangling_delocalized(cfg.omega, cfg.separation, *d, spec);
  return entangling_classical(cfg.omega, cfg.separation, classical_width(cfg), spec);
}

HarvestResult combine(const IntegralValue<double>& p, const IntegralValue<cd>& m) {
  return make_result(p.value, p.err_estimate, m.value, m.err_estimate, p.converged && m.converged);
}

HarvestResult compute(const ScenarioConfig& cfg, const QuadratureSpec& spec) {
  return combine(compute_excitation(cfg, spec), compute_entangling(cfg, spec));
}

}  // namespace udw
