#pragma once

// Complex Gamma function: Lanczos approximation (g = 7, 9 coefficients) on
// Re z >= 1/2 and the reflection formula below that.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "zetalab/complex_math.hpp"
#include "zetalab/errors.hpp"

namespace zetalab {

namespace detail {

inline constexpr double kLanczosG = 7.0;
inline constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline bool is_nonpositive_integer(complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log Gamma for Re z >= 1/2; the imaginary part is the continuous branch
// only up to the log of the rational factor, so callers use exp() or the real part.
inline complex lanczos_log_gamma(complex z) {
  z -= 1.0;
  complex series = kLanczosCoeffs[0];
  for (std::size_t i = 1; i < kLanczosCoeffs.size(); ++i)
    series += kLanczosCoeffs[i] / (z + static_cast<double>(i));
  const complex base = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(base) - base + std::log(series);
}

}  // namespace detail

/// Gamma(z). Relative error ~1e-14 for |Re z| <= 20, |Im z| <= 60.
/// Throws pole_error at non-positive integers.
inline complex gamma(EvalPoint point) {
  const complex z = point.value();
  if (detail::is_nonpositive_integer(z)) throw pole_error("Gamma has a pole at non-positive integers");
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::numbers::pi / (sin_pi(z) * std::exp(detail::lanczos_log_gamma(1.0 - z)));
  }
  return std::exp(detail::lanczos_log_gamma(z));
}

/// log|Gamma(z)|, for Re z > 0.
inline double log_abs_gamma(EvalPoint point) {
  const complex z = point.value();
  if (z.real() <= 0.0) throw domain_error("log_abs_gamma requires Re z > 0");
  if (z.real() < 0.5) {
    return std::log(std::numbers::pi) - std::log(std::abs(sin_pi(z))) -
           detail::lanczos_log_gamma(1.0 - z).real();
  }
  return detail::lanczos_log_gamma(z).real();
}

}  // namespace zetalab
