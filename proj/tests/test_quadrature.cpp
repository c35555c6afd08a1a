#include "udw/kernels.hpp"
#include "udw/quadrature.hpp"
#include "oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace udw;

namespace {

double naive_A(double x) { return (1.0 + std::cos(pi * x)) / ((x * x - 1.0) * (x * x - 1.0)); }

// Richardson-extrapolated midpoint rule; midpoints never land on x = 1 for even n.
double midpoint_shell_integral(int n) {
  auto mid = [](int m) {
    const double h = 2.0 / m;
    double s = 0.0;
    for (int i = 0; i < m; ++i) s += naive_A((i + 0.5) * h);
    return s * h;
  };
  return (4.0 * mid(2 * n) - mid(n)) / 3.0;
}

}  // namespace

TEST(IntegrateFinite, GaussianOnTruncatedRange) {
  const auto r = integrate_finite([](double k) { return std::exp(-k * k); }, 0.0, 20.0, QuadratureSpec{});
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, std::sqrt(pi) / 2, 1e-9 * std::sqrt(pi) / 2);
  EXPECT_LE(std::abs(r.value - std::sqrt(pi) / 2), r.err_estimate + 1e-15);
}

TEST(IntegrateFinite, ShellExclusionNoBlowUp) {
  QuadratureSpec spec;
  const std::vector<Exclusion<double>> ex = {{1.0, pi * pi / 8}};
  const auto r = integrate_finite(naive_A, 0.0, 2.0, spec, ex);
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(std::isfinite(r.value));
  EXPECT_NEAR(r.value, oracle::finite_shell_integral, 1e-9);
  EXPECT_NEAR(r.value, midpoint_shell_integral(20000), 1e-7);
}

TEST(IntegrateFinite, HalvingExclusionRadiusIsStable) {
  QuadratureSpec spec;
  const std::vector<Exclusion<double>> ex = {{1.0, pi * pi / 8}};
  const auto r1 = integrate_finite(naive_A, 0.0, 2.0, spec, ex);
  spec.singularity_radius /= 2;
  const auto r2 = integrate_finite(naive_A, 0.0, 2.0, spec, ex);
  EXPECT_LT(std::abs(r1.value - r2.value) / std::abs(r1.value), 10 * spec.rel_tol);
}

TEST(IntegrateFinite, ZeroIntegrand) {
  const auto r = integrate_finite([](double) { return 0.0; }, 0.0, 1.0, QuadratureSpec{});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_EQ(r.err_estimate, 0.0);
  EXPECT_TRUE(r.converged);
}

TEST(IntegrateFinite, ComplexIntegrand) {
  const auto r = integrate_finite([](double x) { return std::exp(cd(0.0, x)); }, 0.0, pi, QuadratureSpec{});
  EXPECT_NEAR(std::abs(r.value - cd(0.0, 2.0)), 0.0, 1e-12);
}

TEST(IntegrateFinite, BudgetExhaustionIsReported) {
  QuadratureSpec spec;
  spec.max_subdivisions = 2;
  const auto r = integrate_finite([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, spec);
  EXPECT_FALSE(r.converged);
  EXPECT_THROW(require(r), NonConvergence);
  try {
    require(r, "sin(1/x)");
  } catch (const NonConvergence& e) {
    EXPECT_EQ(e.best_estimate.real(), r.value);
    EXPECT_EQ(e.err_estimate, r.err_estimate);
  }
}

TEST(IntegrateSemiInfinite, DirichletIntegral) {
  QuadratureSpec spec;
  spec.tail_mode = OscillatoryPartition{2 * pi};
  const auto r = integrate_semi_infinite([](double k) { return sinc(k); }, spec);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, pi / 2, 1e-9 * pi / 2);
}

TEST(IntegrateSemiInfinite, GaussianMoment) {
  QuadratureSpec spec;
  spec.tail_mode = GaussianDamped{2.0};
  const auto r = integrate_semi_infinite([](double k) { return k * std::exp(-k * k / 4); }, spec);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, 2.0, 2e-9);
  EXPECT_LE(std::abs(r.value - 2.0), r.err_estimate + spec.abs_tol);
}

TEST(IntegrateSemiInfinite, GaussianModeEqualsFiniteRange) {
  QuadratureSpec spec;
  spec.tail_mode = GaussianDamped{1.5};
  auto f = [](double k) { return std::cos(3 * k) * std::exp(-k * k / 2.25) * (1 + k); };
  const auto semi = integrate_semi_infinite(f, spec);
  const double k_max = 1.5 * std::sqrt(std::log(100.0 / spec.abs_tol));
  const auto fin = integrate_finite(f, 0.0, k_max, spec);
  EXPECT_NEAR(semi.value, fin.value, spec.abs_tol);
}

TEST(IntegrateSemiInfinite, DampedSineAgainstTrapezoid) {
  auto f = [](double k) { return std::sin(5 * k) * std::exp(-k) / (1 + k * k); };
  QuadratureSpec spec;
  spec.tail_mode = OscillatoryPartition{2 * pi / 5};
  const auto r = integrate_semi_infinite(f, spec);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.value, oracle::damped_sine_integral, 1e-10);
  // fine trapezoid on [0, 200]
  const int n = 2000000;
  const double h = 200.0 / n;
  double s = 0.5 * (f(0.0) + f(200.0));
  for (int i = 1; i < n; ++i) s += f(i * h);
  // Euler-Maclaurin endpoint term; f'(0) = 5 and f'(200) is negligible
  EXPECT_NEAR(r.value, s * h + h * h * 5.0 / 12.0, 1e-11);
}

TEST(IntegrateSemiInfinite, AlgebraicDecay) {
  QuadratureSpec spec;
  const auto r = integrate_semi_infinite([](double k) { return 1.0 / (1.0 + k * k); }, spec);
  EXPECT_NEAR(r.value, pi / 2, 1e-9);
  const auto shifted = integrate_semi_infinite([](double k) { return 1.0 / (k * k * k); }, spec, 2.0);
  EXPECT_NEAR(shifted.value, 0.125, 1e-12);
}

TEST(WynnEpsilon, AcceleratesAlternatingSeries) {
  std::vector<double> partial;
  double s = 0.0;
  for (int n = 1; n <= 20; ++n) {
    s += (n % 2 ? 1.0 : -1.0) / n;
    partial.push_back(s);
  }
  const auto [value, err] = detail::wynn_epsilon(partial);
  EXPECT_NEAR(value, std::log(2.0), 1e-12);
  EXPECT_LT(err, 1e-8);
}

TEST(Integrate2d, Separable) {
  QuadratureSpec spec;
  const auto r = integrate_2d([](double x, double y) { return x * y; }, 0.0, 1.0, 0.0, 1.0, spec);
  EXPECT_NEAR(r.value, 0.25, 1e-14);
  const auto s = integrate_2d([](double z, double k) { return std::exp(-k) * z * z; }, -1.0, 1.0, 0.0, 10.0, spec);
  EXPECT_NEAR(s.value, 2.0 / 3.0 * (1 - std::exp(-10.0)), 1e-10);
}

TEST(Integrate2d, RecoilTemplateMatchesReducedForm) {
  // k A(G), G = a + k + k^2/(2m) - k p z/m over z in [-1,1], k in [0, 60]
  const double a = 1.0, m = 900.0, p = 3.0, kmax = 60.0;
  auto G = [&](double z, double k) { return a + k + k * k / (2 * m) - k * p * z / m; };
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  const auto two = integrate_2d([&](double z, double k) { return k * spectral_A_at(G(z, k)); }, -1.0, 1.0, 0.0, kmax, spec);
  // z-integral by a fine composite Simpson rule, k adaptive
  auto reduced = [&](double k) {
    const int n = 400;
    const double h = 2.0 / n;
    double s = spectral_A_at(G(-1, k)) + spectral_A_at(G(1, k));
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * spectral_A_at(G(-1 + i * h, k));
    return k * s * h / 3.0;
  };
  const auto one = integrate_finite(reduced, 0.0, kmax, spec);
  EXPECT_NEAR(two.value, one.value, 1e-6 * std::abs(one.value));
}
