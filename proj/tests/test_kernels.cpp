#include "udw/kernels.hpp"
#include "oracle_values.hpp"

#include <gtest/gtest.h>

#include <Eigen/Core>

#include <cmath>
#include <random>

using namespace udw;

namespace {

double rel(cd x, cd y) { return std::abs(x - y) / std::abs(y); }

// (1 + cos pi x)/(x^2 - 1)^2 evaluated naively
double naive_A(double x) { return (1.0 + std::cos(pi * x)) / ((x * x - 1.0) * (x * x - 1.0)); }

}  // namespace

TEST(Switching, Examples) {
  EXPECT_DOUBLE_EQ(switching(pi / 2, 1.0), 1.0);
  EXPECT_EQ(switching(-0.1, 1.0), 0.0);
  EXPECT_NEAR(switching(pi, 1.0), 0.0, 1e-15);
  EXPECT_EQ(switching(pi + 1e-9, 1.0), 0.0);
}

TEST(Sinc, SeriesBranchMatchesDirect) {
  for (double x : {0.0, 1e-8, 0.1, 0.49, 0.51, 2.0}) {
    const double direct = x == 0.0 ? 1.0 : std::sin(x) / x;
    EXPECT_NEAR(sinc(x), direct, 1e-15) << x;
  }
}

TEST(SpectralA, ShellAndDirectValues) {
  EXPECT_NEAR(spectral_A(0.5, 0.5), pi * pi / 8, 1e-14);
  EXPECT_NEAR(spectral_A(0.0, 1.0), pi * pi / 8, 1e-14);
  EXPECT_NEAR(spectral_A(1.0, 3.0), 2.0 / 225.0, 1e-16);
  for (double d : {1e-6, -1e-6})
    EXPECT_LT(std::abs(spectral_A_at(1.0 + d) - pi * pi / 8) / (pi * pi / 8), 1e-4);
}

TEST(SpectralA, MatchesNaiveFormAwayFromShells) {
  for (double x : {0.0, 0.3, 1.7, 2.5, 7.25, 40.1}) EXPECT_NEAR(spectral_A_at(x), naive_A(x), 1e-12 * naive_A(x) + 1e-18);
}

TEST(SpectralA, NonNegative) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 30.0);
  for (int i = 0; i < 10000; ++i) EXPECT_GE(spectral_A_at(u(rng)), 0.0);
}

TEST(SpectralA, SecondDerivative) {
  EXPECT_NEAR(spectral_A_d2_at(1.0), spectral_A_d2_shell, 1e-13);
  EXPECT_NEAR(spectral_A_d2_shell, -0.178805238004129, 1e-14);
  for (double d : {1e-6, -1e-6}) EXPECT_NEAR(spectral_A_d2_at(1.0 + d), spectral_A_d2_shell, 1e-5);
  const double x = 1.7, h = 1e-4;
  const double fd = (spectral_A_at(x + h) - 2 * spectral_A_at(x) + spectral_A_at(x - h)) / (h * h);
  EXPECT_NEAR(spectral_A_d2_at(x), fd, 1e-6);
  // the printed bracket form agrees away from the shell
  EXPECT_NEAR(spectral_A_d2_bracket(2.3), spectral_A_d2_at(2.3), 1e-12);
  EXPECT_NEAR(spectral_A_d2_bracket(0.4), spectral_A_d2_at(0.4), 1e-12);
}

TEST(SpectralB, Examples) {
  EXPECT_LT(std::abs(spectral_B(0.5, 0.5)), 1e-14);
  // first term at a = 1: sin(pi a)/(1 - a^2) -> pi/2, so the term tends to +i pi (2 + k)/4
  for (double k : {0.0, 0.7, 3.0}) {
    const cd first = I_unit * (2.0 + k) * 0.5 * gap_kernel_h(1.0);
    EXPECT_NEAR(std::abs(first - I_unit * pi * (2.0 + k) / 4.0), 0.0, 1e-14);
    const double a = 1.0 - 1e-7;
    const cd nearby = I_unit * (2 * a + k) * std::sin(pi * a) / (2 * a * (1 - a * a));
    EXPECT_LT(rel(first, nearby), 1e-6);
  }
  // a - k = 1: numerator e^{-i pi a} + e^{-i pi k} vanishes, the term stays finite
  const cd at = spectral_B(0.5, 1.5);
  const double d = 1e-6;
  auto printed = [](double k, double a) {
    return I_unit * (2 * a + k) * std::sin(pi * a) / (2 * a * (1 - a * a)) +
           (std::exp(-I_unit * (pi * a)) + std::exp(-I_unit * (pi * k))) / (1 - (a - k) * (a - k));
  };
  EXPECT_TRUE(std::isfinite(std::abs(at)));
  EXPECT_LT(rel(printed(0.5 + d, 1.5), at), 1e-4);
  EXPECT_LT(rel(printed(0.5 - d, 1.5), at), 1e-4);
  EXPECT_LT(rel(printed(2.2, 0.3), spectral_B(2.2, 0.3)), 1e-12);
}

TEST(TimeOrderedKernel, MatchesDirectTimeIntegrals) {
  const struct {
    double u, v, re, im;
  } cases[] = {{0.3, 1.0, oracle::T_u0p3_v1p0_re, oracle::T_u0p3_v1p0_im},
               {-0.7, -1.0, oracle::T_um0p7_vm1p0_re, oracle::T_um0p7_vm1p0_im},
               {1.2, 0.4, oracle::T_u1p2_v0p4_re, oracle::T_u1p2_v0p4_im},
               {0.0, 2.5, oracle::T_u0p0_v2p5_re, oracle::T_u0p0_v2p5_im}};
  for (const auto& c : cases) EXPECT_LT(rel(time_ordered_kernel(c.u, c.v), cd(c.re, c.im)), 1e-11) << c.u << " " << c.v;
}

TEST(TimeOrderedKernel, RegularFormMatchesPrintedForm) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 5.0);
  int tested = 0;
  while (tested < 200) {
    const double alpha = u(rng), beta = u(rng) - 1.0;
    if (std::abs(std::abs(alpha + beta) - 1.0) < 1e-3) continue;
    EXPECT_LT(rel(time_ordered_kernel(alpha - beta, alpha + beta), time_ordered_kernel_printed(alpha, beta)), 1e-10);
    ++tested;
  }
}

TEST(TimeOrderedKernel, ShellApproachMatchesLimit) {
  for (double alpha : {0.2, 0.9, 1.6}) {
    for (double target : {1.0, -1.0}) {
      const double beta = target - alpha;
      const cd limit = time_ordered_kernel(alpha - beta, alpha + beta);
      for (double d : {1e-6, -1e-6}) EXPECT_LT(rel(time_ordered_kernel_printed(alpha, beta + d), limit), 1e-4);
    }
  }
}

TEST(TimeOrderedKernel, ClassicalIdentity) {
  // e^{i pi a} B(k) / (1 - (a+k)^2) = T(a - k, a + k)
  for (double a : {0.1, 1.0, 2.3})
    for (double k : {0.05, 0.8, 4.0}) {
      const cd lhs = std::exp(I_unit * (pi * a)) * spectral_B(k, a) / (1 - (a + k) * (a + k));
      EXPECT_LT(rel(time_ordered_kernel(a - k, a + k), lhs), 1e-11);
    }
}

TEST(TimeOrderedKernel, SecondDerivativesMatchDifferences) {
  const double u = 0.4, v = 1.3, h = 1e-3;
  auto T = [](double x, double y) { return time_ordered_kernel(x, y); };
  auto richardson = [](cd coarse, cd fine) { return (4.0 * fine - coarse) / 3.0; };
  const cd uu_c = (T(u + 2 * h, v) - 2.0 * T(u, v) + T(u - 2 * h, v)) / (4 * h * h);
  const cd uu_f = (T(u + h, v) - 2.0 * T(u, v) + T(u - h, v)) / (h * h);
  const cd vv_c = (T(u, v + 2 * h) - 2.0 * T(u, v) + T(u, v - 2 * h)) / (4 * h * h);
  const cd vv_f = (T(u, v + h) - 2.0 * T(u, v) + T(u, v - h)) / (h * h);
  EXPECT_LT(rel(time_ordered_kernel_uu(u, v), richardson(uu_c, uu_f)), 1e-6);
  EXPECT_LT(rel(time_ordered_kernel_vv(u, v), richardson(vv_c, vv_f)), 1e-6);
}

TEST(TimeOrderedKernel, DividedKernelBranchesAgree) {
  // the Gauss-Legendre branch and the direct quotient meet at |w| = 0.5
  for (double u : {-1.3, 0.2, 0.9}) {
    const cd below = divided_kernel(u, 0.5 - 1e-12);
    const cd above = divided_kernel(u, 0.5 + 1e-12);
    EXPECT_LT(rel(below, above), 1e-10);
  }
}
