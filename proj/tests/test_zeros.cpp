#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "zetalab/zeros.hpp"

using namespace zetalab;

namespace {

// Independent oracle: fine-grid sign scan of Z built from zeta_em and theta, then bisection.
double z_from_em(double t) {
  const complex z = zeta_em(EvalPoint(0.5, t), 1e-13).value;
  return (std::exp(complex(0.0, riemann_siegel_theta(t))) * z).real();
}

std::vector<double> em_bisection_zeros(std::size_t k) {
  std::vector<double> out;
  const double step = 0.02;
  double t_prev = 10.0;
  double z_prev = z_from_em(t_prev);
  for (int i = 1; out.size() < k; ++i) {
    const double t = 10.0 + i * step;
    const double z = z_from_em(t);
    if (z_prev * z < 0.0) {
      double lo = t_prev;
      double hi = t;
      double zlo = z_prev;
      while (hi - lo > 1e-11) {
        const double mid = 0.5 * (lo + hi);
        const double zm = z_from_em(mid);
        if ((zm < 0.0) == (zlo < 0.0)) {
          lo = mid;
          zlo = zm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    t_prev = t;
    z_prev = z;
  }
  return out;
}

}  // namespace

TEST(ScanBrackets, NoZerosBelowTen) { EXPECT_TRUE(scan_brackets(1.0, 10.0, 0.1).empty()); }

TEST(ScanBrackets, CountUpToFiftyIsStableAcrossSteps) {
  const auto coarse = scan_brackets(1.0, 50.0, 0.25);
  const auto mid = scan_brackets(1.0, 50.0, 0.1);
  const auto fine = scan_brackets(1.0, 50.0, 0.05);
  EXPECT_EQ(mid.size(), 10u);
  EXPECT_EQ(coarse.size(), mid.size());
  EXPECT_EQ(fine.size(), mid.size());
  for (const auto& b : mid) EXPECT_TRUE(b.valid());
}

TEST(ScanBrackets, RejectsBadRanges) {
  EXPECT_THROW(scan_brackets(0.5, 10.0, 0.1), usage_error);
  EXPECT_THROW(scan_brackets(10.0, 5.0, 0.1), usage_error);
  EXPECT_THROW(scan_brackets(1.0, 10.0, 0.0), usage_error);
  EXPECT_THROW(scan_brackets(1.0, 10.0, 0.5), usage_error);
}

TEST(Refine, RejectsInvalidBracket) {
  EXPECT_THROW(refine(ZeroBracket{14.0, 14.1, -1.0, -0.5}, 1e-10), refinement_error);
  EXPECT_THROW(refine(ZeroBracket{14.2, 14.0, 1.0, -1.0}, 1e-10), refinement_error);
  EXPECT_THROW(refine(ZeroBracket{14.0, 14.2, -0.1, 0.05}, 1e-12), domain_error);
}

TEST(FirstZeros, FirstThreeMatchReference) {
  const auto zeros = first_zeros(3, 1e-10);
  ASSERT_EQ(zeros.size(), 3u);
  EXPECT_NEAR(zeros[0].t, 14.134725, 1e-6);
  EXPECT_NEAR(zeros[1].t, 21.022040, 1e-6);
  EXPECT_NEAR(zeros[2].t, 25.010858, 1e-6);
  // mpmath zetazero(1..3)
  EXPECT_NEAR(zeros[0].t, 14.134725141734694, 1e-9);
  EXPECT_NEAR(zeros[1].t, 21.022039638771555, 1e-9);
  EXPECT_NEAR(zeros[2].t, 25.010857580145689, 1e-9);
}

TEST(FirstZeros, AgreeWithEulerMaclaurinBisection) {
  const auto oracle = em_bisection_zeros(3);
  const auto zeros = first_zeros(3, 1e-10);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(zeros[i].t, oracle[i], 1e-6) << i;
}

TEST(FirstZeros, ResidualsAndReflectedPoint) {
  for (const auto& z : first_zeros(3, 1e-10)) {
    EXPECT_LT(z.residual, 1e-6);
    EXPECT_LT(std::abs(zeta_em(EvalPoint(z.point()), 1e-12).value), 1e-5);
    EXPECT_LT(std::abs(zeta_global(EvalPoint(1.0 - z.point()), 1e-12).value), 1e-5);
    EXPECT_LE(z.bracket.t_lo, z.t);
    EXPECT_GE(z.bracket.t_hi, z.t);
  }
}

TEST(FirstZeros, TwentyZerosAscendingAndMatchReference) {
  // mpmath zetazero(1..20)
  const double want[] = {14.134725141734694, 21.022039638771555, 25.010857580145689, 30.424876125859513,
                         32.935061587739190, 37.586178158825671, 40.918719012147495, 43.327073280914999,
                         48.005150881167160, 49.773832477672302, 52.970321477714461, 56.446247697063394,
                         59.347044002602353, 60.831778524609810, 65.112544048081607, 67.079810529494174,
                         69.546401711173980, 72.067157674481908, 75.704690699083933, 77.144840068874806};
  const auto zeros = first_zeros(20, 1e-10);
  ASSERT_EQ(zeros.size(), 20u);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_NEAR(zeros[i].t, want[i], 1e-8) << i;
    if (i > 0) EXPECT_GT(zeros[i].t, zeros[i - 1].t);
  }
}

TEST(FirstZeros, RejectsBadCounts) {
  EXPECT_THROW(first_zeros(0, 1e-10), domain_error);
  EXPECT_THROW(first_zeros(21, 1e-10), domain_error);
  EXPECT_THROW(first_zeros(3, 1e-11), domain_error);
}
