#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "zetalab/series.hpp"

using namespace zetalab;

namespace {

const double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

}  // namespace

TEST(DirichletPartial, SingleTerm) {
  const SeriesValue v = dirichlet_partial(2.0, 1);
  EXPECT_EQ(v.value, complex(1.0, 0.0));
  EXPECT_EQ(v.terms_used, 1u);
}

TEST(DirichletPartial, ApproachesZetaTwoWithinTailBound) {
  for (std::uint64_t N : {10u, 1000u, 100000u}) {
    const SeriesValue v = dirichlet_partial(2.0, N);
    const double gap = kZeta2 - v.value.real();
    EXPECT_GT(gap, 0.0);
    EXPECT_LE(gap, v.abs_err_est);
    // Integral bounds: 1/(N+1) <= tail <= 1/N.
    EXPECT_GE(gap, 1.0 / static_cast<double>(N + 1));
  }
  EXPECT_NEAR(dirichlet_partial(2.0, 100000).value.real(), 1.6449341, 2e-5);
}

TEST(DirichletPartial, DivergentRegionFlagsUnbounded) {
  const SeriesValue v = dirichlet_partial(0.5, 10);
  EXPECT_TRUE(std::isfinite(v.value.real()));
  EXPECT_FALSE(v.bounded);
  EXPECT_TRUE(std::isinf(v.abs_err_est));
}

TEST(EtaPartial, Examples) {
  EXPECT_DOUBLE_EQ(eta_partial(1.0, 2).value.real(), 0.5);
  EXPECT_NEAR(eta_partial(1.0, 1'000'000).value.real(), 0.6931472, 1e-6);
  EXPECT_NEAR(eta_partial(2.0, 10'000).value.real(), 0.8224670, 1e-7);
  EXPECT_THROW(eta_partial(0.0, 10), domain_error);
  EXPECT_THROW(eta_partial(complex(-0.5, 3.0), 10), domain_error);
}

TEST(EtaPartial, AlternatingBoundIsRigorousForRealS) {
  const double ln2 = std::numbers::ln2;
  const double pi2_12 = std::numbers::pi * std::numbers::pi / 12.0;
  for (std::uint64_t N = 1; N <= 2000; N += 37) {
    const SeriesValue a = eta_partial(1.0, N);
    EXPECT_LE(std::abs(a.value.real() - ln2), a.abs_err_est) << N;
    const SeriesValue b = eta_partial(2.0, N);
    EXPECT_LE(std::abs(b.value.real() - pi2_12), b.abs_err_est) << N;
  }
}

TEST(Eta, AcceleratedRealValues) {
  const SeriesValue one = eta(1.0, 1e-12);
  EXPECT_NEAR(one.value.real(), std::numbers::ln2, 1e-12);
  EXPECT_NEAR(one.value.real(), 0.693147180560, 1e-12);
  EXPECT_LE(one.abs_err_est, 1e-12);
  EXPECT_NEAR(eta(2.0, 1e-12).value.real(), 0.822467033424, 1e-12);
  EXPECT_NEAR(eta(2.0, 1e-12).value.real(), std::numbers::pi * std::numbers::pi / 12.0, 1e-12);
}

TEST(Eta, VanishesAtFirstCriticalZero) {
  const SeriesValue v = eta(complex(0.5, 14.134725), 1e-10);
  EXPECT_LT(std::abs(v.value), 1e-6);
  // Ordinate from mpmath's zetazero(1).
  EXPECT_LT(std::abs(eta(complex(0.5, 14.134725141734694), 1e-12).value), 1e-11);
}

TEST(Eta, ErrorEstimateCoversObservedError) {
  // Reference from a long partial sum averaged over two consecutive N (error ~ N^{-2}).
  const complex s(0.8, 6.0);
  const std::uint64_t N = 2'000'000;
  const complex ref = 0.5 * (eta_partial(s, N).value + eta_partial(s, N + 1).value);
  const SeriesValue v = eta(s, 1e-10);
  EXPECT_LT(std::abs(v.value - ref), 1e-9);
  EXPECT_LE(v.abs_err_est, 1e-10);
}

TEST(Eta, TermCountGrowsWithImaginaryPart) {
  EXPECT_LT(eta(complex(0.5, 1.0), 1e-10).terms_used, eta(complex(0.5, 40.0), 1e-10).terms_used);
}

TEST(Eta, RejectsBadArguments) {
  EXPECT_THROW(eta(1.0, 1e-15), precision_error);
  EXPECT_THROW(eta(0.0, 1e-10), domain_error);
  EXPECT_THROW(eta(-1.0, 1e-10), domain_error);
  EXPECT_THROW(EvalPoint(std::nan(""), 0.0), domain_error);
}
