#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "zetalab/errors.hpp"

namespace zetalab {

using complex = std::complex<double>;

/// A point s = sigma + i t of the complex plane. Components must be finite.
struct EvalPoint {
  double sigma = 0.0;
  double t = 0.0;

  constexpr EvalPoint() = default;
  EvalPoint(double sigma_, double t_ = 0.0) : sigma(sigma_), t(t_) { validate(); }
  EvalPoint(complex s) : sigma(s.real()), t(s.imag()) { validate(); }

  complex value() const noexcept { return {sigma, t}; }
  operator complex() const noexcept { return value(); }

  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;

 private:
  void validate() const {
    if (!std::isfinite(sigma) || !std::isfinite(t))
      throw domain_error("evaluation point must have finite components");
  }
};

namespace detail {

// sin(pi x) and cos(pi x) for real x with exact reduction modulo 2.
inline double sin_pi_real(double x) {
  if (x == std::floor(x)) return 0.0;
  double r = std::fmod(x, 2.0);
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  // r in [-1, 1]; fold onto [-1/2, 1/2]
  if (r > 0.5) r = 1.0 - r;
  if (r < -0.5) r = -1.0 - r;
  return std::sin(std::numbers::pi * r);
}

inline double cos_pi_real(double x) { return sin_pi_real(x + 0.5); }

}  // namespace detail

/// sin(pi z). Exact zero at real integers.
inline complex sin_pi(complex z) {
  const double x = z.real();
  const double y = std::numbers::pi * z.imag();
  return {detail::sin_pi_real(x) * std::cosh(y), detail::cos_pi_real(x) * std::sinh(y)};
}

/// n^{-s} for a positive integer n.
inline complex inv_pow(double n, complex s) {
  if (n == 1.0) return 1.0;
  const double ln = std::log(n);
  const double mag = std::exp(-s.real() * ln);
  const double phase = -s.imag() * ln;
  return {mag * std::cos(phase), mag * std::sin(phase)};
}

/// 2^{1-s}.
inline complex two_pow_one_minus(complex s) { return std::exp((1.0 - s) * std::numbers::ln2); }

inline std::string format_complex(complex z) {
  return std::to_string(z.real()) + (z.imag() < 0 ? "-" : "+") + std::to_string(std::abs(z.imag())) + "i";
}

}  // namespace zetalab
