#pragma once

// Riemann zeta evaluators:
//   zeta_eta    eta(s) / (1 - 2^{1-s}) on Re(s) > 0
//   zeta_em     Euler-Maclaurin summation, independent of the eta path
//   zeta_global zeta_eta/zeta_em on Re(s) > 0, functional equation on Re(s) <= 0
// plus the Riemann-Siegel theta function and Hardy's Z function.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "zetalab/complex_math.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/gamma.hpp"
#include "zetalab/series.hpp"

namespace zetalab {

/// Radius of the disks around 1 + 2 pi i k / ln 2 (k != 0) where zeta_eta refuses.
inline constexpr double kEtaHazardRadius = 0.05;

/// Validated parameter box for zeta_em.
inline constexpr double kEmSigmaMin = -10.0;
inline constexpr double kEmSigmaMax = 10.0;
inline constexpr double kEmAbsTMax = 80.0;

/// Distance from s to the nearest zero of 1 - 2^{1-s} other than s = 1.
inline double eta_hazard_distance(EvalPoint s) {
  const double spacing = 2.0 * std::numbers::pi / std::numbers::ln2;
  double k = std::round(s.t / spacing);
  if (k == 0.0) k = s.t >= 0.0 ? 1.0 : -1.0;
  return std::abs(s.value() - complex(1.0, k * spacing));
}

inline bool is_pole(EvalPoint s) { return s.sigma == 1.0 && s.t == 0.0; }

/// zeta(s) = eta(s) / (1 - 2^{1-s}) for Re(s) > 0.
inline SeriesValue zeta_eta(EvalPoint s, double tol) {
  if (is_pole(s)) throw pole_error("zeta has a pole at s = 1");
  if (s.sigma <= 0.0) throw domain_error("zeta_eta requires Re(s) > 0");
  if (eta_hazard_distance(s) < kEtaHazardRadius)
    throw conditioning_error("s is within " + std::to_string(kEtaHazardRadius) +
                             " of a zero of 1 - 2^{1-s}; use zeta_em");
  const complex denom = 1.0 - two_pow_one_minus(s);
  const SeriesValue e = eta(s, tol);
  const complex value = e.value / denom;
  const double err = e.abs_err_est / std::abs(denom) + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
  return {value, err, e.terms_used, true};
}

namespace detail {

// B_{2k} / (2k)! for k = 1..9.
inline constexpr std::array<double, 9> kBernoulliOverFactorial = {
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
    43867.0 / 798.0 / 6402373705728000.0};

inline constexpr int kEmCorrectionTerms = 8;
inline constexpr std::uint64_t kEmMaxShift = 200000;

struct EmErrorModel {
  double truncation;
  double rounding;
  double total() const { return truncation + rounding; }
};

// |first omitted correction| * |s + 2p + 1| / (sigma + 2p + 1), and the
// rounding accumulated by the direct sum, for shift point N.
class EmEstimator {
 public:
  explicit EmEstimator(EvalPoint s) : s_(s) {
    double poch = 1.0;  // |s (s+1) ... (s + 2p)|
    for (int j = 0; j <= 2 * kEmCorrectionTerms; ++j) poch *= std::abs(s.value() + static_cast<double>(j));
    const double tail_factor = std::abs(s.value() + (2.0 * kEmCorrectionTerms + 1.0)) /
                               (s.sigma + 2.0 * kEmCorrectionTerms + 1.0);
    coeff_ = std::abs(kBernoulliOverFactorial[kEmCorrectionTerms]) * poch * tail_factor;
  }

  // Must be called for N = 1, 2, 3, ... in order.
  EmErrorModel next() {
    const double N = static_cast<double>(++n_);
    if (n_ > 1) abs_sum_ += std::pow(N - 1.0, -s_.sigma);
    const double trunc = coeff_ * std::pow(N, -s_.sigma - 2.0 * kEmCorrectionTerms - 1.0);
    const double tail = std::pow(N, 1.0 - s_.sigma) / std::abs(s_.value() - 1.0) + std::pow(N, -s_.sigma);
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * (abs_sum_ + tail);
    return {trunc, rounding};
  }

 private:
  EvalPoint s_;
  double coeff_ = 0.0;
  double abs_sum_ = 0.0;
  std::uint64_t n_ = 0;
};

}  // namespace detail

/// Shift point used by zeta_em before error-model adjustment.
inline std::uint64_t em_default_shift(EvalPoint s) {
  return std::max<std::uint64_t>(10, static_cast<std::uint64_t>(std::ceil(std::abs(s.t) / 2.0)) + 10);
}

/// zeta(s) by Euler-Maclaurin summation with 8 Bernoulli corrections.
/// Validated for -10 <= sigma <= 10, |t| <= 80.
inline SeriesValue zeta_em(EvalPoint s, double tol) {
  if (is_pole(s)) throw pole_error("zeta has a pole at s = 1");
  if (s.sigma < kEmSigmaMin || s.sigma > kEmSigmaMax || std::abs(s.t) > kEmAbsTMax)
    throw domain_error("zeta_em is validated for " + std::to_string(kEmSigmaMin) + " <= Re(s) <= " +
                       std::to_string(kEmSigmaMax) + ", |Im(s)| <= " + std::to_string(kEmAbsTMax));
  if (!(tol >= kMinTolerance)) throw precision_error("tolerance below 1e-14 is not attainable");

  // Pick the shift point with the smallest modelled error among 1..N_hi,
  // where N_hi is the default shift grown until truncation is below tol/4.
  detail::EmEstimator estimator(s);
  std::uint64_t best_n = 1;
  detail::EmErrorModel best = estimator.next();
  std::uint64_t hi = em_default_shift(s);
  for (std::uint64_t N = 2; N <= hi; ++N) {
    const detail::EmErrorModel m = estimator.next();
    if (m.total() < best.total()) {
      best = m;
      best_n = N;
    }
    if (N == hi && m.truncation > tol / 4.0 && hi < detail::kEmMaxShift) ++hi;
  }

  const complex z = s.value();
  const double N = static_cast<double>(best_n);
  complex sum = 0.0;
  for (std::uint64_t n = best_n - 1; n >= 1; --n) sum += inv_pow(static_cast<double>(n), z);
  const complex n_pow = inv_pow(N, z);  // N^{-s}
  sum += n_pow * N / (z - 1.0);
  sum += 0.5 * n_pow;
  complex rising = z;           // s (s+1) ... (s + 2k - 2)
  complex power = n_pow / N;    // N^{-s-2k+1}
  for (int k = 0; k < detail::kEmCorrectionTerms; ++k) {
    sum += detail::kBernoulliOverFactorial[k] * rising * power;
    rising *= (z + (2.0 * k + 1.0)) * (z + (2.0 * k + 2.0));
    power /= N * N;
  }
  return {sum, best.total(), best_n, true};
}

/// zeta(s) for every s != 1. Re(s) > 0 goes through zeta_eta (zeta_em near
/// the denominator zeros); Re(s) <= 0 uses
///   zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s).
/// Negative even integers return exactly 0.
inline SeriesValue zeta_global(EvalPoint s, double tol) {
  if (is_pole(s)) throw pole_error("zeta has a pole at s = 1");
  if (s.sigma > 0.0) {
    try {
      return zeta_eta(s, tol);
    } catch (const conditioning_error&) {
      return zeta_em(s, tol);
    }
  }
  if (s.t == 0.0 && s.sigma == std::floor(s.sigma)) {
    if (s.sigma == 0.0) return zeta_em(s, tol);
    if (std::fmod(s.sigma, 2.0) == 0.0) return {0.0, 0.0, 1, true};
  }
  const complex z = s.value();
  const SeriesValue reflected = zeta_global(EvalPoint(1.0 - z), tol);
  const complex factor = std::exp(z * std::numbers::ln2 + (z - 1.0) * std::log(std::numbers::pi)) *
                         sin_pi(z / 2.0) * gamma(EvalPoint(1.0 - z));
  const complex value = factor * reflected.value;
  const double err = std::abs(factor) * reflected.abs_err_est +
                     64.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(z)) * std::abs(value);
  return {value, err, reflected.terms_used, true};
}

/// Riemann-Siegel theta from its asymptotic expansion
///   (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760t^3) + 31/(80640t^5) + 127/(430080t^7).
/// Requires t >= 1; accurate to better than 1e-10 for t >= 10.
inline double riemann_siegel_theta(double t) {
  if (!(t >= 1.0)) throw domain_error("riemann_siegel_theta requires t >= 1");
  const double inv = 1.0 / t;
  const double inv2 = inv * inv;
  const double series = inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80640.0 + inv2 * (127.0 / 430080.0))));
  return 0.5 * t * std::log(t / (2.0 * std::numbers::pi)) - 0.5 * t - std::numbers::pi / 8.0 + series;
}

/// Largest t below which hardy_z skips its realness check (theta is asymptotic).
inline constexpr double kHardyRealnessCheckFrom = 10.0;
inline constexpr double kHardyRealnessTolerance = 1e-8;

/// Z(t) = e^{i theta(t)} zeta(1/2 + i t), real for real t.
inline double hardy_z(double t, double tol) {
  if (!(t >= 1.0)) throw domain_error("hardy_z requires t >= 1");
  const complex zeta = zeta_global(EvalPoint(0.5, t), tol).value;
  const double theta = riemann_siegel_theta(t);
  const complex product = complex(std::cos(theta), std::sin(theta)) * zeta;
  if (t >= kHardyRealnessCheckFrom &&
      std::abs(product.imag()) > kHardyRealnessTolerance * std::max(1.0, std::abs(zeta)))
    throw error("hardy_z: imaginary residue " + std::to_string(product.imag()) + " at t = " + std::to_string(t));
  return product.real();
}

}  // namespace zetalab
