#include "udw/jet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

using udw::Jet;
using J2 = Jet<double, 2>;

TEST(Jet, PolynomialDerivatives) {
  const J2 x = J2::variable(1.5);
  const J2 y = x * x * x - 2.0 * x;
  EXPECT_DOUBLE_EQ(y.derivative(0), 1.5 * 1.5 * 1.5 - 3.0);
  EXPECT_DOUBLE_EQ(y.derivative(1), 3.0 * 1.5 * 1.5 - 2.0);
  EXPECT_DOUBLE_EQ(y.derivative(2), 6.0 * 1.5);
}

TEST(Jet, QuotientAndTranscendentals) {
  const double x0 = 0.7;
  const J2 x = J2::variable(x0);
  const J2 q = sin(x) / (1.0 + x * x);
  // d^2/dx^2 sin(x)/(1+x^2) by central differences of the plain function
  auto f = [](double t) { return std::sin(t) / (1.0 + t * t); };
  const double h = 1e-4;
  EXPECT_NEAR(q.derivative(1), (f(x0 + h) - f(x0 - h)) / (2 * h), 1e-8);
  EXPECT_NEAR(q.derivative(2), (f(x0 + h) - 2 * f(x0) + f(x0 - h)) / (h * h), 1e-6);
  const J2 e = exp(2.0 * x);
  EXPECT_NEAR(e.derivative(2), 4.0 * std::exp(2 * x0), 1e-12);
  EXPECT_NEAR(cos(x).derivative(2), -std::cos(x0), 1e-15);
}

TEST(Jet, SlopeScalesDerivatives) {
  const J2 x = J2::variable(0.3, 2.0);
  EXPECT_NEAR((x * x).derivative(2), 8.0, 1e-15);
}

TEST(Jet, ComplexCoefficients) {
  using C2 = Jet<std::complex<double>, 2>;
  const C2 z = C2(J2::variable(0.4)) * std::complex<double>(0.0, 3.0);
  const C2 w = exp(z);  // e^{3 i x}
  const std::complex<double> expected = -9.0 * std::exp(std::complex<double>(0.0, 1.2));
  EXPECT_NEAR(std::abs(w.derivative(2) - expected), 0.0, 1e-12);
}
