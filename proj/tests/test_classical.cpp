#include "udw/classical.hpp"
#include "udw/harvest.hpp"
#include "oracle_values.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace udw;

namespace {

double rel(double x, double y) { return std::abs(x - y) / std::abs(y); }
double rel(cd x, cd y) { return std::abs(x - y) / std::abs(y); }

ScenarioConfig classical(double a, double s, double width = 0.0) {
  ScenarioConfig c;
  c.omega = a;
  c.separation = s;
  if (width > 0) c.model = Smeared{width};
  return c;
}

}  // namespace

TEST(ClassicalExcitation, PointlikeOracles) {
  EXPECT_LT(rel(require(excitation_classical(0.1, 0.0)), oracle::P0_a0p1), 1e-9);
  EXPECT_LT(rel(require(excitation_classical(1.0, 0.0)), oracle::P0_a1), 1e-9);
  EXPECT_LT(rel(require(excitation_classical(2.5, 0.0)), oracle::P0_a2p5), 1e-9);
}

TEST(ClassicalExcitation, SmearedOracle) {
  EXPECT_LT(rel(require(excitation_classical(1.0, 1.0)), oracle::P1_a1), 1e-9);
}

TEST(ClassicalExcitation, NarrowSmearingRecoversPointlike) {
  const double p0 = require(excitation_classical(1.0, 0.0));
  EXPECT_LT(rel(require(excitation_classical(1.0, 1e-3)), p0), 1e-3);
}

TEST(ClassicalExcitation, WideSmearingIsSmaller) {
  EXPECT_LT(require(excitation_classical(1.0, 1e3)), require(excitation_classical(1.0, 0.0)));
}

TEST(ClassicalExcitation, LargeGapIsExpensive) {
  EXPECT_LT(require(excitation_classical(50.0, 0.0)), require(excitation_classical(0.1, 0.0)));
}

TEST(ClassicalExcitation, StrictlyDecreasingInWidth) {
  double prev = require(excitation_classical(0.7, 0.0));
  for (double w : {0.1, 0.3, 1.0, 2.0, 5.0, 20.0}) {
    const double p = require(excitation_classical(0.7, w));
    EXPECT_LT(p, prev) << w;
    EXPECT_GT(p, 0.0);
    prev = p;
  }
}

TEST(ClassicalEntangling, PointlikeOracles) {
  EXPECT_LT(rel(require(entangling_classical(1.0, 1.0, 0.0)), cd(oracle::M0_a1_s1_re, oracle::M0_a1_s1_im)), 1e-9);
  EXPECT_LT(rel(require(entangling_classical(0.1, 0.1, 0.0)), cd(oracle::M0_a0p1_s0p1_re, oracle::M0_a0p1_s0p1_im)),
            1e-9);
  EXPECT_LT(rel(require(entangling_classical(2.5, 3.0, 0.0)), cd(oracle::M0_a2p5_s3_re, oracle::M0_a2p5_s3_im)), 1e-8);
  EXPECT_LT(rel(require(entangling_classical(0.5, 2.0, 0.0)), cd(oracle::M0_a0p5_s2_re, oracle::M0_a0p5_s2_im)), 1e-9);
}

TEST(ClassicalEntangling, SmearedOracle) {
  EXPECT_LT(rel(require(entangling_classical(1.0, 1.0, 1.0)), cd(oracle::M1_a1_s1_re, oracle::M1_a1_s1_im)), 1e-9);
}

TEST(ClassicalEntangling, BruteForceFinePanels) {
  // 2*10^6 midpoint nodes on [0, 800] plus the leading asymptotic tail of the
  // 1/k-decaying part (its amplitude falls off as c cos(k s)/k)
  const double a = 0.1, s = 0.1, K = 800.0;
  const int n = 2000000;
  const double h = K / n;
  cd sum = 0.0;
  for (int i = 0; i < n; ++i) sum += entangling_integrand_classical((i + 0.5) * h, a, s, 0.0);
  sum *= h;
  const cd head = -sum / (2 * pi * pi * s);
  const cd full = require(entangling_classical(a, s, 0.0));
  // the remainder beyond K is bounded by ~ |integrand(K)| * (2/s) / (2 pi^2 s)
  const double tail_bound = std::abs(entangling_integrand_classical(K, a, s, 0.0)) * 2.0 * K / (2 * pi * pi * s) * 4.0 / s;
  EXPECT_LT(std::abs(head - full), tail_bound);
  EXPECT_LT(rel(head, full), 1e-2);
}

TEST(ClassicalEntangling, ShellIntegrandMatchesSeriesLimit) {
  for (double a : {0.1, 0.5, 0.9})
    for (double s : {0.3, 2.0})
      for (double w : {0.0, 1.0}) {
        const cd lim = entangling_integrand_shell_limit(a, s, w);
        for (double d : {1e-6, -1e-6})
          EXPECT_LT(rel(entangling_integrand_classical(1.0 - a + d, a, s, w), lim), 1e-4) << a << " " << s;
      }
}

TEST(ClassicalEntangling, ClusterDecomposition) {
  const double far = std::abs(require(entangling_classical(1.0, 1e3, 0.0)));
  const double near = std::abs(require(entangling_classical(1.0, 0.1, 0.0)));
  EXPECT_LT(far, 1e-6 * near);
}

TEST(ClassicalEntangling, SmearingReducesM) {
  EXPECT_LT(std::abs(require(entangling_classical(1.0, 1.0, 1.0))), std::abs(require(entangling_classical(1.0, 1.0, 0.0))));
}

TEST(ClassicalEntangling, EnvelopeDecreasingInSeparation) {
  const double m0 = std::abs(require(entangling_classical(0.1, 0.05, 0.0)));
  for (double s = 0.1; s <= 5.0; s += 0.1) EXPECT_LE(std::abs(require(entangling_classical(0.1, s, 0.0))), m0) << s;
}

TEST(ClassicalNegativity, Examples) {
  EXPECT_GT(negativity_classical(classical(0.1, 0.1)), 0.0);
  // |M| <= P far apart
  const auto far = classical(3.0, 5.0);
  ASSERT_LE(std::abs(entangling_classical(far)), excitation_classical(far));
  EXPECT_EQ(negativity_classical(far), 0.0);
  EXPECT_GE(negativity_classical(classical(0.1, 0.1)), negativity_classical(classical(0.1, 0.1, 1.0)));
}

TEST(ClassicalNegativity, DetectorsAreInterchangeable) {
  const auto r = compute(classical(0.8, 0.6, 0.5));
  EXPECT_EQ(r.p_a, r.p_b);
  EXPECT_EQ(r.negativity, std::max(0.0, std::abs(r.m) - r.p_a));
}

TEST(SpectralPointTest, Fields) {
  const auto sp = spectral_point(0.5, 0.5);
  EXPECT_NEAR(sp.a_val, pi * pi / 8, 1e-14);
  EXPECT_LT(std::abs(sp.b_val), 1e-14);
}
