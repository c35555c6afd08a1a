#pragma once

// Model dispatch: one call per scenario, whatever the detector model.

#include "udw/quadrature.hpp"
#include "udw/scenario.hpp"

#include <complex>

namespace udw {

IntegralValue<double> compute_excitation(const ScenarioConfig& cfg, const QuadratureSpec& spec = {});
IntegralValue<std::complex<double>> compute_entangling(const ScenarioConfig& cfg, const QuadratureSpec& spec = {});

// P, M and negativity. Throws RegimeRejected for rejected delocalized models;
// non-convergence is reported through HarvestResult::converged.
HarvestResult compute(const ScenarioConfig& cfg, const QuadratureSpec& spec = {});

// Combines a precomputed excitation with an entangling term.
HarvestResult combine(const IntegralValue<double>& p, const IntegralValue<std::complex<double>>& m);

}  // namespace udw
