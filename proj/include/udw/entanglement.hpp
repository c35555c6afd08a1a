#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace udw {

// Second-order reduced state of the detector pair (per coupling squared).
struct SecondOrderState {
  double p_a = 0.0;
  double p_b = 0.0;
  std::complex<double> m{};
};

// max{0, sqrt((pa - pb)^2/4 + |m|^2) - (pa + pb)/2}
inline double negativity(const SecondOrderState& s) {
  const double root = std::hypot(0.5 * (s.p_a - s.p_b), std::abs(s.m));
  const double d = root - 0.5 * (s.p_a + s.p_b);
  return std::isnan(d) || d > 0.0 ? d : 0.0;  // NaN inputs stay NaN
}

}  // namespace udw
