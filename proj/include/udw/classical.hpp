#pragma once

// Pointlike and Gaussian-smeared detectors with classical centers of mass.
// width = 0 selects the pointlike limit.

#include "udw/kernels.hpp"
#include "udw/quadrature.hpp"
#include "udw/scenario.hpp"

#include <complex>

namespace udw {

struct SpectralPoint {
  double k;
  double a_val;
  std::complex<double> b_val;
};

SpectralPoint spectral_point(double k, double a);

// (1/2pi^2) int_0^inf dk k exp(-width^2 k^2/4) A(k)
IntegralValue<double> excitation_classical(double a, double width, const QuadratureSpec& spec = {});

// -(e^{i pi a}/(2 pi^2 s)) int_0^inf dk sin(ks) exp(-width^2 k^2/4) B(k)/(1 - (a+k)^2)
IntegralValue<std::complex<double>> entangling_classical(double a, double s, double width,
                                                         const QuadratureSpec& spec = {});

// Integrand of the entangling term (without the -1/(2 pi^2 s) prefactor), in the
// printed closed form; singular-looking at a + k = 1.
std::complex<double> entangling_integrand_classical(double k, double a, double s, double width);
// Its limit on the shell a + k = 1.
std::complex<double> entangling_integrand_shell_limit(double a, double s, double width);

// Config-level entry points; width taken from the model (Pointlike or Smeared).
double classical_width(const ScenarioConfig& cfg);
double excitation_classical(const ScenarioConfig& cfg, const QuadratureSpec& spec = {});
std::complex<double> entangling_classical(const ScenarioConfig& cfg, const QuadratureSpec& spec = {});
double negativity_classical(const ScenarioConfig& cfg, const QuadratureSpec& spec = {});

}  // namespace udw
