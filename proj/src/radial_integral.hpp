#pragma once

#include "udw/quadrature.hpp"

namespace udw::detail {

enum class SpectralOrder { A, A2 };  // A or its second derivative

// int_0^inf dk k^power exp(-width^2 k^2/4) g(G(k)),  G(k) = a + c k + inv_2m k^2,
// with g = A or A''. The integral is taken in x = G(k) wherever G is monotone, so
// the oscillation of g has period exactly 2 and the shell sits at x = 1.
struct RadialIntegral {
  double a;
  double c;
  double inv_2m = 0.0;
  int power = 1;
  double width = 0.0;
  SpectralOrder order = SpectralOrder::A;
};

IntegralValue<double> radial_spectral_integral(const RadialIntegral& r, const QuadratureSpec& spec);

// Gaussian cut exp(-width^2 k^2/4) < abs_tol/100.
double gaussian_cut(double width, const QuadratureSpec& spec);

}  // namespace udw::detail
