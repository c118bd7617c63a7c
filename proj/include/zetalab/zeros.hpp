#pragma once

// Critical-line zeros of zeta: sign changes of Hardy's Z on a grid, refined by
// bisection.

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "zetalab/errors.hpp"
#include "zetalab/series.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

struct ZeroBracket {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double z_lo = 0.0;
  double z_hi = 0.0;

  bool valid() const { return t_lo < t_hi && z_lo * z_hi < 0.0; }
};

struct ZeroRecord {
  double t = 0.0;
  double residual = 0.0;  // |eta(1/2 + i t)|
  std::uint64_t iterations = 0;
  ZeroBracket bracket;

  complex point() const { return {0.5, t}; }
};

struct ZeroFinderConfig {
  double eval_tol = 1e-12;       // tolerance handed to the zeta evaluator
  double residual_tol = 1e-6;    // a refined zero must satisfy |eta| below this
  double scan_step = 0.1;
  double scan_start = 1.0;
  double scan_end = 60.0;        // first window; extended to scan_limit when needed
  double scan_limit = 80.0;
  std::size_t max_zeros = 20;
};

/// Brackets of every sign change of Z sampled at t_min, t_min + step, ... <= t_max.
inline std::vector<ZeroBracket> scan_brackets(double t_min, double t_max, double step,
                                              const ZeroFinderConfig& cfg = {}) {
  if (!(t_min >= 1.0) || !(t_min < t_max)) throw usage_error("scan requires 1 <= t_min < t_max");
  if (!(step > 0.0) || step > 0.25) throw usage_error("scan step must lie in (0, 0.25]");
  std::vector<ZeroBracket> out;
  // Grid points are computed from the index to avoid accumulating drift.
  const auto count = static_cast<std::uint64_t>(std::floor((t_max - t_min) / step + 1e-9));
  double t_prev = t_min;
  double z_prev = hardy_z(t_prev, cfg.eval_tol);
  for (std::uint64_t i = 1; i <= count; ++i) {
    const double t = t_min + static_cast<double>(i) * step;
    const double z = hardy_z(t, cfg.eval_tol);
    // A grid point with Z exactly 0 is skipped; the next point closes a wider bracket.
    if (z == 0.0) continue;
    if (z_prev * z < 0.0) out.push_back({t_prev, t, z_prev, z});
    t_prev = t;
    z_prev = z;
  }
  return out;
}

/// Bisect a bracket until its width is at most tol.
inline ZeroRecord refine(const ZeroBracket& bracket, double tol, const ZeroFinderConfig& cfg = {}) {
  if (!bracket.valid()) throw refinement_error("bracket has no strict sign change");
  if (!(tol >= 1e-10)) throw domain_error("refine tolerance must be >= 1e-10");
  ZeroBracket b = bracket;
  std::uint64_t iterations = 0;
  double mid = 0.5 * (b.t_lo + b.t_hi);
  while (b.t_hi - b.t_lo > tol) {
    mid = 0.5 * (b.t_lo + b.t_hi);
    const double z = hardy_z(mid, cfg.eval_tol);
    ++iterations;
    if (z == 0.0) {
      b.t_lo = b.t_hi = mid;
      break;
    }
    if ((z < 0.0) == (b.z_lo < 0.0)) {
      b.t_lo = mid;
      b.z_lo = z;
    } else {
      b.t_hi = mid;
      b.z_hi = z;
    }
    if (iterations > 200) throw refinement_error("bisection did not converge");
  }
  const double t = 0.5 * (b.t_lo + b.t_hi);
  const double residual = std::abs(eta(EvalPoint(0.5, t), cfg.eval_tol).value);
  if (!(residual < cfg.residual_tol))
    throw refinement_error("refined point t = " + std::to_string(t) + " has |eta| = " + std::to_string(residual));
  return {t, residual, iterations, bracket};
}

/// The k smallest positive zero ordinates, ascending, each refined to tol.
inline std::vector<ZeroRecord> first_zeros(std::size_t k, double tol, const ZeroFinderConfig& cfg = {}) {
  if (k < 1 || k > cfg.max_zeros)
    throw domain_error("first_zeros supports 1 <= k <= " + std::to_string(cfg.max_zeros));
  std::vector<ZeroBracket> brackets = scan_brackets(cfg.scan_start, cfg.scan_end, cfg.scan_step, cfg);
  if (brackets.size() < k) {
    const auto extra = scan_brackets(cfg.scan_end, cfg.scan_limit, cfg.scan_step, cfg);
    brackets.insert(brackets.end(), extra.begin(), extra.end());
  }
  if (brackets.size() < k) throw domain_error("fewer than k zeros below t = " + std::to_string(cfg.scan_limit));
  std::vector<ZeroRecord> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.push_back(refine(brackets[i], tol, cfg));
  return out;
}

}  // namespace zetalab
