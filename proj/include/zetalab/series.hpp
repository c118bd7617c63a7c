#pragma once

// Partial sums of the Dirichlet series sum n^{-s} and of the alternating
// series eta(s) = sum (-1)^{n+1} n^{-s}, plus an accelerated evaluator for
// eta based on the Cohen, Rodriguez Villegas and Zagier weighting.

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>

#include "zetalab/complex_math.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/gamma.hpp"

namespace zetalab {

/// A complex value with an absolute-error estimate and the number of terms
/// that produced it. `bounded` is false when no finite estimate exists
/// (e.g. a divergent partial sum); abs_err_est is then +infinity.
struct SeriesValue {
  complex value{};
  double abs_err_est = 0.0;
  std::uint64_t terms_used = 1;
  bool bounded = true;
};

inline constexpr double kMinTolerance = 1e-14;

/// sum_{n <= N} n^{-s}. The error estimate is the integral tail bound
/// N^{1-sigma}/(sigma-1) when sigma > 1, otherwise unbounded.
inline SeriesValue dirichlet_partial(EvalPoint s, std::uint64_t N) {
  if (N < 1) throw domain_error("dirichlet_partial requires N >= 1");
  complex sum = 0.0;
  // Summed from the smallest term up.
  for (std::uint64_t n = N; n >= 1; --n) sum += inv_pow(static_cast<double>(n), s);
  SeriesValue out{sum, 0.0, N, true};
  if (s.sigma > 1.0) {
    out.abs_err_est = std::pow(static_cast<double>(N), 1.0 - s.sigma) / (s.sigma - 1.0);
  } else {
    out.abs_err_est = std::numeric_limits<double>::infinity();
    out.bounded = false;
  }
  return out;
}

/// sum_{n <= N} (-1)^{n+1} n^{-s}. Error estimate is |(N+1)^{-s}|, the
/// alternating-series bound (rigorous for real s).
inline SeriesValue eta_partial(EvalPoint s, std::uint64_t N) {
  if (s.sigma <= 0.0) throw domain_error("eta series requires Re(s) > 0");
  if (N < 1) throw domain_error("eta_partial requires N >= 1");
  complex sum = 0.0;
  for (std::uint64_t n = N; n >= 1; --n) {
    const complex term = inv_pow(static_cast<double>(n), s);
    sum += (n % 2 == 1) ? term : -term;
  }
  const double next = std::pow(static_cast<double>(N + 1), -s.sigma);
  return {sum, next, N, true};
}

namespace detail {

inline constexpr std::uint64_t kMaxAcceleratedTerms = 360;

// Bound on the weighted-polynomial truncation error for n terms:
// 2 * (Gamma(sigma)/|Gamma(s)|) * 2/(3+sqrt8)^n, the factor being the total
// variation of the measure whose moments are the terms (k+1)^{-s}.
inline double cvz_log_scale(EvalPoint s) {
  return std::lgamma(s.sigma) - log_abs_gamma(s) + std::log(4.0);
}

}  // namespace detail

/// Accelerated eta(s), Re(s) > 0. Term count is chosen from the error model
/// so that the truncation estimate is below tol/2.
inline SeriesValue eta(EvalPoint s, double tol) {
  if (s.sigma <= 0.0) throw domain_error("eta series requires Re(s) > 0");
  if (!(tol >= kMinTolerance))
    throw precision_error("tolerance below " + std::to_string(kMinTolerance) +
                          " is not attainable in double precision");
  const double ln_rate = std::log(3.0 + std::sqrt(8.0));
  const double log_scale = detail::cvz_log_scale(s);
  const double wanted = (log_scale - std::log(tol / 2.0)) / ln_rate;
  const auto n = static_cast<std::uint64_t>(std::max(2.0, std::ceil(wanted)));
  if (n > detail::kMaxAcceleratedTerms)
    throw domain_error("accelerated eta needs more than " + std::to_string(detail::kMaxAcceleratedTerms) +
                       " terms here; |Im s| too large");

  // d_n = ((3+sqrt8)^n + (3+sqrt8)^{-n}) / 2
  const double dn_raw = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
  const double d = (dn_raw + 1.0 / dn_raw) / 2.0;
  double b = -1.0;
  double c = -d;
  complex sum = 0.0;
  double abs_sum = 0.0;
  const double nd = static_cast<double>(n);
  for (std::uint64_t k = 0; k < n; ++k) {
    const double kd = static_cast<double>(k);
    c = b - c;
    const complex term = inv_pow(kd + 1.0, s);
    sum += c * term;
    abs_sum += std::abs(c) * std::abs(term);
    b = (kd + nd) * (kd - nd) * b / ((kd + 0.5) * (kd + 1.0));
  }
  const complex value = sum / d;
  const double truncation = std::exp(log_scale - nd * ln_rate);
  const double rounding = 8.0 * std::numeric_limits<double>::epsilon() * (abs_sum / d) * std::sqrt(nd);
  return {value, truncation + rounding, n, true};
}

}  // namespace zetalab
