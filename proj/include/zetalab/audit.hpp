#pragma once

// Numerical audits of the divisor-sum identity for beta(n), the zeta
// evaluators, and the double array
//
//   a(i, j) = (-1)^{j/i + 1} (-1)^{Omega(i)} j^{-s}   if i | j,   0 otherwise
//
// whose row sums are lambda(i) i^{-s} eta(s) and whose column sums are
// beta(j) j^{-s}. Every check returns an AuditReport; convergence probes
// carry the Diagnostic verdict and never pass or fail.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zetalab/complex_math.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/ntheory.hpp"
#include "zetalab/series.hpp"
#include "zetalab/zeros.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

enum class ClaimId { Beta33, Mult33, SplitIdentity36, Identity36, TrivialZeros25, ZeroFree24, TailSup35, Interchange35 };

inline constexpr std::array<ClaimId, 8> kAllClaims = {
    ClaimId::Beta33,         ClaimId::Mult33,     ClaimId::SplitIdentity36, ClaimId::Identity36,
    ClaimId::TrivialZeros25, ClaimId::ZeroFree24, ClaimId::TailSup35,       ClaimId::Interchange35};

/// Identifier used in JSON reports.
inline std::string_view claim_id_name(ClaimId id) {
  switch (id) {
    case ClaimId::Beta33: return "Beta33";
    case ClaimId::Mult33: return "Mult33";
    case ClaimId::SplitIdentity36: return "SplitIdentity36";
    case ClaimId::Identity36: return "Identity36";
    case ClaimId::TrivialZeros25: return "TrivialZeros25";
    case ClaimId::ZeroFree24: return "ZeroFree24";
    case ClaimId::TailSup35: return "TailSup35";
    case ClaimId::Interchange35: return "Interchange35";
  }
  return "?";
}

/// Short name used on the command line.
inline std::string_view claim_cli_name(ClaimId id) {
  switch (id) {
    case ClaimId::Beta33: return "beta33";
    case ClaimId::Mult33: return "mult33";
    case ClaimId::SplitIdentity36: return "split36";
    case ClaimId::Identity36: return "identity36";
    case ClaimId::TrivialZeros25: return "trivial25";
    case ClaimId::ZeroFree24: return "zerofree24";
    case ClaimId::TailSup35: return "tails35";
    case ClaimId::Interchange35: return "interchange35";
  }
  return "?";
}

inline std::optional<ClaimId> parse_claim(std::string_view name) {
  for (ClaimId id : kAllClaims)
    if (claim_cli_name(id) == name) return id;
  return std::nullopt;
}

enum class Verdict { Pass, Fail, Diagnostic };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Diagnostic: return "diagnostic";
  }
  return "?";
}

using Scalar = std::variant<bool, std::int64_t, double, complex, std::string>;

struct Entry {
  std::string key;
  Scalar value;
};

/// Insertion-ordered key/value list, so serialized reports are deterministic.
class KeyValues {
 public:
  template <class T>
  KeyValues& set(std::string key, T&& value) {
    Scalar v = to_scalar(std::forward<T>(value));
    for (auto& e : entries_)
      if (e.key == key) {
        e.value = std::move(v);
        return *this;
      }
    entries_.push_back({std::move(key), std::move(v)});
    return *this;
  }

  const Scalar* find(std::string_view key) const {
    for (const auto& e : entries_)
      if (e.key == key) return &e.value;
    return nullptr;
  }

  const Scalar& at(std::string_view key) const {
    if (const Scalar* v = find(key)) return *v;
    throw usage_error("missing key: " + std::string(key));
  }

  double real(std::string_view key) const {
    const Scalar& v = at(key);
    if (const auto* d = std::get_if<double>(&v)) return *d;
    if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
    throw usage_error("key is not real-valued: " + std::string(key));
  }

  std::int64_t integer(std::string_view key) const { return std::get<std::int64_t>(at(key)); }
  bool flag(std::string_view key) const { return std::get<bool>(at(key)); }
  complex cplx(std::string_view key) const { return std::get<complex>(at(key)); }

  const std::vector<Entry>& entries() const { return entries_; }

 private:
  template <class T>
  static Scalar to_scalar(T&& value) {
    using U = std::decay_t<T>;
    if constexpr (std::is_same_v<U, bool>) {
      return value;
    } else if constexpr (std::is_integral_v<U>) {
      return static_cast<std::int64_t>(value);
    } else if constexpr (std::is_floating_point_v<U>) {
      return static_cast<double>(value);
    } else if constexpr (std::is_same_v<U, complex> || std::is_same_v<U, EvalPoint>) {
      return complex(value);
    } else {
      return std::string(std::forward<T>(value));
    }
  }

  std::vector<Entry> entries_;
};

/// Plot-ready numeric table. The first column is the swept variable.
struct SeriesTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct AuditReport {
  ClaimId claim_id = ClaimId::Beta33;
  KeyValues params;
  KeyValues metrics;
  Verdict verdict = Verdict::Diagnostic;
  SeriesTable series;
};

/// Every threshold and tolerance the audits use. Thresholds marked "derived"
/// come from the mpmath sweeps in tests/oracles/sweeps.py and record where they came
/// from in the report.
struct AuditConfig {
  double eval_tol = 1e-13;                // evaluator tolerance for reference values
  double rearrangement_tol = 1e-12;       // combined vs b + c at finite J
  double monotone_jitter = 0.10;          // allowed relative increase between grid points
  double converged_floor = 1e-12;         // residuals below this count as converged
  double trivial_zero_tol = 1e-8;
  double odd_control_min = 1e-3;          // |zeta(-3)| must exceed this

  // derived: half of min |zeta| = 0.06035 on the default off-line grid with t step 0.5
  double zero_free_margin = 0.0302;
  std::string zero_free_margin_source =
      "half of the coarse-sweep minimum 0.06035 (mpmath, t step 0.5), tests/oracles/sweeps.py";
  double zero_exclusion = 0.05;            // grid distance from the critical line and from s = 1

  double row_vanish_threshold = 1e-4;
  // derived: half of min over J in {1e4,1e5,1e6} of |column partial| at zeros 1..3
  std::array<double, 3> column_thresholds = {2.313, 0.8468, 0.4487};
  std::string column_threshold_source =
      "half of the direct-summation minimum over J in {1e4,1e5,1e6} (mpmath), tests/oracles/sweeps.py";

  double tail_m_safety = 2.0;
  double zero_residual_max = 1e-6;
};

// ---------------------------------------------------------------------------
// The double array

/// a(i, j) at s. Requires i within the sieve.
inline complex a_ij(const FactorSieve& sieve, std::uint64_t i, std::uint64_t j, EvalPoint s) {
  if (i < 1 || j < 1) throw domain_error("a_ij indices start at 1");
  sieve.check(i);
  if (j % i != 0) return 0.0;
  const int sign = ((j / i) % 2 == 1) ? 1 : -1;
  return static_cast<double>(sign * liouville(sieve, i)) * inv_pow(static_cast<double>(j), s);
}

/// sum_{l <= L} a(i, i l) = lambda(i) i^{-s} sum_{l <= L} (-1)^{l+1} l^{-s}.
inline complex row_sum_partial(const FactorSieve& sieve, std::uint64_t i, std::uint64_t L, EvalPoint s) {
  sieve.check(i);
  const double lambda = liouville(sieve, i);
  return lambda * inv_pow(static_cast<double>(i), s) * eta_partial(s, L).value;
}

/// sum_i a(i, j) = beta(j) j^{-s}, with beta from its closed form.
inline complex column_sum(const FactorSieve& sieve, std::uint64_t j, EvalPoint s) {
  sieve.check(j);
  return static_cast<double>(beta_closed(j)) * inv_pow(static_cast<double>(j), s);
}

// ---------------------------------------------------------------------------
// Helpers

namespace detail {

inline void require_grid(const std::vector<double>& grid, std::string_view what) {
  if (grid.size() < 2) throw usage_error(std::string(what) + " needs at least two points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1])) throw usage_error(std::string(what) + " must be strictly ascending");
}

inline void require_grid(const std::vector<std::uint64_t>& grid, std::string_view what) {
  if (grid.size() < 2) throw usage_error(std::string(what) + " needs at least two points");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1]) throw usage_error(std::string(what) + " must be strictly ascending");
}

// Each value is at most (1 + jitter) times its predecessor, or below the floor.
inline bool decreasing_with_jitter(const std::vector<double>& values, double jitter, double floor) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > floor && values[i] > (1.0 + jitter) * values[i - 1]) return false;
  return true;
}

// Powers of ten in [lo, J] followed by J itself.
inline std::vector<std::uint64_t> decade_checkpoints(std::uint64_t lo, std::uint64_t J) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = lo; x <= J; x *= 10) out.push_back(x);
  if (out.empty() || out.back() != J) out.push_back(J);
  return out;
}

inline complex zeta_reference(EvalPoint s, double tol, std::string* evaluator = nullptr) {
  try {
    if (evaluator) *evaluator = "zeta_em";
    return zeta_em(s, tol).value;
  } catch (const domain_error&) {
    if (evaluator) *evaluator = "zeta_global";
    return zeta_global(s, tol).value;
  }
}

}  // namespace detail

/// Integral bound sum_{m > floor(sqrt J)} m^{-2 sigma} <= X^{1 - 2 sigma} / (2 sigma - 1), X = floor(sqrt J).
inline double square_tail_bound(double sigma, std::uint64_t J) {
  const double X = static_cast<double>(isqrt(J));
  return std::pow(X, 1.0 - 2.0 * sigma) / (2.0 * sigma - 1.0);
}

// ---------------------------------------------------------------------------
// beta(n): definition against closed form

inline AuditReport check_beta_theorem(const FactorSieve& sieve, std::uint64_t N) {
  if (N < 1) throw usage_error("beta33 needs N >= 1");
  if (N > sieve.limit()) throw bounds_error("N exceeds sieve limit");
  AuditReport r{ClaimId::Beta33, {}, {}, Verdict::Pass, {{"n", "mismatches"}, {}}};
  r.params.set("N", N);
  std::int64_t mismatches = 0;
  std::int64_t first = -1;
  std::uint64_t next_checkpoint = 10;
  for (std::uint64_t n = 1; n <= N; ++n) {
    if (beta_bruteforce(sieve, n) != beta_closed(n)) {
      ++mismatches;
      if (first < 0) first = static_cast<std::int64_t>(n);
    }
    if (n == next_checkpoint || n == N) {
      r.series.rows.push_back({static_cast<double>(n), static_cast<double>(mismatches)});
      if (n == next_checkpoint) next_checkpoint *= 10;
    }
  }
  r.metrics.set("checked", N).set("mismatches", mismatches).set("first_mismatch", first);
  r.verdict = mismatches == 0 ? Verdict::Pass : Verdict::Fail;
  return r;
}

/// beta(p^a m) = beta(p^a) beta(m) for odd primes p, odd m coprime to p,
/// a >= 1, p^a m <= N; and beta(p^a) = 1 or 0 as a is even or odd.
inline AuditReport check_multiplicative_identity(const FactorSieve& sieve, std::uint64_t N) {
  if (N < 1) throw usage_error("mult33 needs N >= 1");
  if (N > sieve.limit()) throw bounds_error("N exceeds sieve limit");
  AuditReport r{ClaimId::Mult33, {}, {}, Verdict::Pass, {{"a", "triples", "failures"}, {}}};
  r.params.set("N", N);
  std::vector<int> beta(N + 1, 0);
  for (std::uint64_t n = 1; n <= N; ++n) beta[n] = beta_bruteforce(sieve, n);

  std::vector<std::int64_t> triples_by_a;
  std::vector<std::int64_t> failures_by_a;
  std::int64_t triples = 0;
  std::int64_t failures = 0;
  std::int64_t prime_power_failures = 0;
  std::string first_failure;
  for (std::uint32_t p : sieve.primes()) {
    if (p > N) break;
    if (p == 2) continue;
    std::uint64_t pa = p;
    for (std::size_t a = 1; pa <= N; ++a, pa *= p) {
      if (triples_by_a.size() < a) {
        triples_by_a.push_back(0);
        failures_by_a.push_back(0);
      }
      const int expected_pp = (a % 2 == 0) ? 1 : 0;
      if (beta[pa] != expected_pp) ++prime_power_failures;
      for (std::uint64_t m = 1; pa * m <= N; m += 2) {
        if (m % p == 0) continue;
        ++triples;
        ++triples_by_a[a - 1];
        if (beta[pa * m] != beta[pa] * beta[m]) {
          ++failures;
          ++failures_by_a[a - 1];
          if (first_failure.empty())
            first_failure = "p=" + std::to_string(p) + ",a=" + std::to_string(a) + ",m=" + std::to_string(m);
        }
      }
      if (pa > N / p) break;
    }
  }
  for (std::size_t a = 0; a < triples_by_a.size(); ++a)
    r.series.rows.push_back({static_cast<double>(a + 1), static_cast<double>(triples_by_a[a]),
                             static_cast<double>(failures_by_a[a])});
  r.metrics.set("triples", triples)
      .set("failures", failures)
      .set("prime_power_failures", prime_power_failures)
      .set("first_failure", first_failure.empty() ? std::string("none") : first_failure);
  r.verdict = (failures == 0 && prime_power_failures == 0) ? Verdict::Pass : Verdict::Fail;
  return r;
}

// ---------------------------------------------------------------------------
// Split of sum beta(j) j^{-s} into squares and twice squares

/// Partial sums at J of b_j (squares), c_j (twice squares) and beta(j) j^{-s}.
struct SplitSeries {
  std::uint64_t J = 0;
  complex b_partial{};
  complex c_partial{};
  complex combined{};
};

/// Running split sums, reporting the largest |combined - (b + c)| over every J' <= J.
class SplitAccumulator {
 public:
  SplitAccumulator(std::vector<int> beta, EvalPoint s) : beta_(std::move(beta)), s_(s) {}

  // Advance to J (must be >= current J and within the beta table).
  const SplitSeries& advance_to(std::uint64_t J) {
    if (J >= beta_.size()) throw bounds_error("split series beyond beta table");
    for (std::uint64_t j = state_.J + 1; j <= J; ++j) {
      const int b = beta_[j];
      if (b != 0) {
        const complex term = static_cast<double>(b) * inv_pow(static_cast<double>(j), s_);
        state_.combined += term;
        const BetaClass cls = classify(j);
        if (cls.kind == BetaKind::Square) state_.b_partial += inv_pow(static_cast<double>(j), s_);
        if (cls.kind == BetaKind::TwiceSquare) state_.c_partial += -2.0 * inv_pow(static_cast<double>(j), s_);
      }
      max_gap_ = std::max(max_gap_, std::abs(state_.combined - (state_.b_partial + state_.c_partial)));
      state_.J = j;
    }
    return state_;
  }

  double max_rearrangement_gap() const { return max_gap_; }

 private:
  std::vector<int> beta_;
  EvalPoint s_;
  SplitSeries state_{};
  double max_gap_ = 0.0;
};

inline SplitSeries split_series(const FactorSieve& sieve, EvalPoint s, std::uint64_t J) {
  SplitAccumulator acc(beta_table(sieve, J), s);
  return acc.advance_to(J);
}

inline AuditReport check_split_identity(const FactorSieve& sieve, const std::vector<EvalPoint>& points, std::uint64_t J,
                                        const AuditConfig& cfg = {}) {
  if (points.empty()) throw usage_error("split36 needs at least one s");
  if (J < 1) throw usage_error("split36 needs J >= 1");
  if (J > sieve.limit()) throw bounds_error("J exceeds sieve limit");
  for (const EvalPoint& s : points)
    if (!(s.sigma > 0.5)) throw domain_error("split identity requires Re(s) > 1/2");

  AuditReport r{ClaimId::SplitIdentity36, {}, {}, Verdict::Pass,
                {{"J", "s_index", "rearrangement_gap", "b_residual", "c_residual"}, {}}};
  r.params.set("J", J).set("points", static_cast<std::int64_t>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) r.params.set("s" + std::to_string(i), points[i]);

  const std::vector<int> beta = beta_table(sieve, J);
  const auto checkpoints = detail::decade_checkpoints(10, J);
  double worst_gap = 0.0;
  bool all_decreasing = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const EvalPoint s = points[i];
    const complex zeta2s = detail::zeta_reference(EvalPoint(2.0 * s.value()), cfg.eval_tol);
    const complex c_limit = -two_pow_one_minus(s) * zeta2s;
    SplitAccumulator acc(beta, s);
    std::vector<double> b_res;
    std::vector<double> c_res;
    SplitSeries last;
    for (std::uint64_t x : checkpoints) {
      last = acc.advance_to(x);
      const double gap = std::abs(last.combined - (last.b_partial + last.c_partial));
      const double rb = std::abs(last.b_partial - zeta2s);
      const double rc = std::abs(last.c_partial - c_limit);
      r.series.rows.push_back({static_cast<double>(x), static_cast<double>(i), gap, rb, rc});
      if (x >= 1000) {
        b_res.push_back(rb);
        c_res.push_back(rc);
      }
    }
    const bool decreasing = detail::decreasing_with_jitter(b_res, cfg.monotone_jitter, cfg.converged_floor) &&
                            detail::decreasing_with_jitter(c_res, cfg.monotone_jitter, cfg.converged_floor);
    all_decreasing = all_decreasing && decreasing;
    worst_gap = std::max(worst_gap, acc.max_rearrangement_gap());
    const std::string k = "s" + std::to_string(i) + "_";
    r.metrics.set(k + "combined", last.combined)
        .set(k + "b_partial", last.b_partial)
        .set(k + "c_partial", last.c_partial)
        .set(k + "max_rearrangement_gap", acc.max_rearrangement_gap())
        .set(k + "b_residual", std::abs(last.b_partial - zeta2s))
        .set(k + "c_residual", std::abs(last.c_partial - c_limit))
        .set(k + "residuals_decreasing", decreasing);
  }
  r.metrics.set("max_rearrangement_gap", worst_gap)
      .set("rearrangement_tol", cfg.rearrangement_tol)
      .set("residuals_decreasing", all_decreasing);
  r.verdict = (worst_gap < cfg.rearrangement_tol && all_decreasing) ? Verdict::Pass : Verdict::Fail;
  return r;
}

// ---------------------------------------------------------------------------
// sum beta(j) j^{-s} = (1 - 2^{1-s}) zeta(2s) for Re(s) > 1/2

/// Gaps |sum_{j <= J} beta(j) j^{-s} - (1 - 2^{1-s}) zeta(2s)| along J_grid.
/// Passes when the gap at the last J is below tol (default: the square-tail
/// bound at that J) and the gaps decrease along the grid within the jitter.
inline AuditReport check_identity(const FactorSieve& sieve, const std::vector<EvalPoint>& points,
                                  const std::vector<std::uint64_t>& J_grid, std::optional<double> tol = std::nullopt,
                                  const AuditConfig& cfg = {}) {
  if (points.empty()) throw usage_error("identity36 needs at least one s");
  detail::require_grid(J_grid, "J grid");
  const std::uint64_t J_max = J_grid.back();
  if (J_max > sieve.limit()) throw bounds_error("J exceeds sieve limit");
  for (const EvalPoint& s : points)
    if (!(s.sigma > 0.5)) throw domain_error("identity requires Re(s) > 1/2");

  AuditReport r{ClaimId::Identity36, {}, {}, Verdict::Pass, {{"J", "s_index", "gap", "tail_bound"}, {}}};
  r.params.set("J_max", J_max).set("points", static_cast<std::int64_t>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) r.params.set("s" + std::to_string(i), points[i]);
  if (tol) r.params.set("tol", *tol);

  const std::vector<int> beta = beta_table(sieve, J_max);
  bool all_pass = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const EvalPoint s = points[i];
    const complex reference =
        (1.0 - two_pow_one_minus(s)) * detail::zeta_reference(EvalPoint(2.0 * s.value()), cfg.eval_tol);
    complex partial = 0.0;
    std::uint64_t j = 0;
    std::vector<double> gaps;
    for (std::uint64_t J : J_grid) {
      for (++j; j <= J; ++j)
        if (beta[j] != 0) partial += static_cast<double>(beta[j]) * inv_pow(static_cast<double>(j), s);
      j = J;
      gaps.push_back(std::abs(partial - reference));
      r.series.rows.push_back({static_cast<double>(J), static_cast<double>(i), gaps.back(),
                               square_tail_bound(s.sigma, J)});
    }
    const double limit = tol.value_or(square_tail_bound(s.sigma, J_max));
    const double full_bound = square_tail_bound(s.sigma, J_max) +
                              std::pow(2.0, 1.0 - s.sigma) * square_tail_bound(s.sigma, J_max / 2);
    const bool decreasing = detail::decreasing_with_jitter(gaps, cfg.monotone_jitter, cfg.converged_floor);
    const bool below = gaps.back() < limit;
    all_pass = all_pass && decreasing && below;
    const std::string k = "s" + std::to_string(i) + "_";
    r.metrics.set(k + "reference", reference)
        .set(k + "partial", partial)
        .set(k + "gap", gaps.back())
        .set(k + "threshold", limit)
        .set(k + "two_tail_bound", full_bound)
        .set(k + "below_threshold", below)
        .set(k + "gaps_decreasing", decreasing);
  }
  r.verdict = all_pass ? Verdict::Pass : Verdict::Fail;
  return r;
}

// ---------------------------------------------------------------------------
// Row tails at a zero of eta

/// Supremum over rows m <= m_max of |sum_{n >= n1} a(m, n)| at a zero of eta,
/// with the estimate of M = sup_n |sum_{l > n} (-1)^{l+1} l^{-s}|.
struct TailDiagnostics {
  EvalPoint s;
  std::uint64_t n1 = 0;
  std::uint64_t m_max = 0;
  double sup_tail = 0.0;
  std::uint64_t argmax_m = 0;
  double eta_bound_M = 0.0;
  double eta_residual = 0.0;  // |eta(s)|, folded into every tail value as an error bar
};

inline TailDiagnostics tail_sup(EvalPoint s, std::uint64_t n1, std::uint64_t m_max, const AuditConfig& cfg = {}) {
  if (n1 < 2) throw usage_error("tail_sup needs n1 >= 2");
  if (m_max < n1) throw usage_error("tail_sup needs m_max >= n1");
  const complex eta_value = eta(s, std::max(cfg.eval_tol, kMinTolerance)).value;
  const double residual = std::abs(eta_value);
  if (!(residual < cfg.zero_residual_max))
    throw domain_error("tail_sup requires a zero of eta; |eta(s)| = " + std::to_string(residual));

  // prefix[k] = sum_{l <= k} (-1)^{l+1} l^{-s}; the tail from k + 1 is eta - prefix[k] ~ -prefix[k].
  std::vector<complex> prefix(n1 + 1, 0.0);
  double sup_remainder = 0.0;
  for (std::uint64_t l = 1; l <= n1; ++l) {
    const complex term = inv_pow(static_cast<double>(l), s);
    prefix[l] = prefix[l - 1] + ((l % 2 == 1) ? term : -term);
  }
  for (std::uint64_t n = 0; n <= n1; ++n) sup_remainder = std::max(sup_remainder, std::abs(eta_value - prefix[n]));

  TailDiagnostics d{s, n1, m_max, 0.0, 0, cfg.tail_m_safety * sup_remainder, residual};
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    // Row m reaches column n >= n1 at l >= ceil(n1/m), so the omitted head ends at k = floor((n1-1)/m).
    const std::uint64_t k = (n1 - 1) / m;
    const double value = std::pow(static_cast<double>(m), -s.sigma) * std::abs(prefix[k]);
    if (value > d.sup_tail) {
      d.sup_tail = value;
      d.argmax_m = m;
    }
  }
  return d;
}

inline AuditReport check_tail_sup(const ZeroRecord& rho, const std::vector<std::uint64_t>& n1_grid,
                                  const AuditConfig& cfg = {}) {
  detail::require_grid(n1_grid, "n1 grid");
  AuditReport r{ClaimId::TailSup35, {}, {}, Verdict::Diagnostic,
                {{"n1", "sup_tail", "argmax_m", "eta_bound_M", "inv_sqrt_n1"}, {}}};
  r.params.set("zero_t", rho.t).set("m_max_factor", std::int64_t{2});
  std::vector<double> sups;
  double M = 0.0;
  for (std::uint64_t n1 : n1_grid) {
    const TailDiagnostics d = tail_sup(EvalPoint(0.5, rho.t), n1, 2 * n1, cfg);
    sups.push_back(d.sup_tail);
    M = std::max(M, d.eta_bound_M);
    r.series.rows.push_back({static_cast<double>(n1), d.sup_tail, static_cast<double>(d.argmax_m), d.eta_bound_M,
                             1.0 / std::sqrt(static_cast<double>(n1))});
    r.metrics.set("eta_residual", d.eta_residual);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < sups.size(); ++i) decreasing = decreasing && sups[i] < sups[i - 1];
  r.metrics.set("sup_tail_first", sups.front())
      .set("sup_tail_last", sups.back())
      .set("sup_tail_strictly_decreasing", decreasing)
      .set("eta_bound_M", M);
  return r;
}

// ---------------------------------------------------------------------------
// Row order against column order at a critical-line zero

inline double column_threshold_for(std::size_t zero_index, double reference_abs, const AuditConfig& cfg,
                                   std::string* source) {
  if (zero_index >= 1 && zero_index <= cfg.column_thresholds.size()) {
    if (source) *source = cfg.column_threshold_source;
    return cfg.column_thresholds[zero_index - 1];
  }
  if (source) *source = "half of |reference| (no oracle sweep for this zero)";
  return 0.5 * reference_abs;
}

/// zero_index is 1-based (1 for the first zero above the real axis); it only
/// selects which derived column threshold applies.
inline AuditReport interchange_probe(const FactorSieve& sieve, const ZeroRecord& rho, std::size_t zero_index,
                                     const std::vector<std::uint64_t>& M_grid,
                                     const std::vector<std::uint64_t>& J_grid, const AuditConfig& cfg = {}) {
  detail::require_grid(M_grid, "M grid");
  detail::require_grid(J_grid, "J grid");
  if (J_grid.back() > sieve.limit() || M_grid.back() > sieve.limit()) throw bounds_error("grid exceeds sieve limit");
  const EvalPoint s(0.5, rho.t);
  AuditReport r{ClaimId::Interchange35, {}, {}, Verdict::Diagnostic,
                {{"x", "order", "abs_value", "abs_minus_reference"}, {}}};
  r.params.set("zero_index", static_cast<std::int64_t>(zero_index)).set("zero_t", rho.t);

  const complex eta_value = eta(s, std::max(cfg.eval_tol, kMinTolerance)).value;
  std::string evaluator;
  const complex zeta2 = detail::zeta_reference(EvalPoint(2.0 * s.value()), cfg.eval_tol, &evaluator);
  const complex reference = (1.0 - two_pow_one_minus(s)) * zeta2;

  // Row order: every full row equals lambda(m) m^{-s} eta(s).
  complex row_total = 0.0;
  double max_row = 0.0;
  std::uint64_t m = 0;
  for (std::uint64_t M : M_grid) {
    for (++m; m <= M; ++m) row_total += static_cast<double>(liouville(sieve, m)) * inv_pow(static_cast<double>(m), s);
    m = M;
    const double value = std::abs(row_total * eta_value);
    max_row = std::max(max_row, value);
    r.series.rows.push_back({static_cast<double>(M), 0.0, value, std::abs(row_total * eta_value - reference)});
  }

  // Column order: sum_{j <= J} beta(j) j^{-s}.
  const std::vector<int> beta = beta_table(sieve, J_grid.back());
  complex column = 0.0;
  double min_col = std::numeric_limits<double>::infinity();
  double max_col_dev = 0.0;
  std::uint64_t j = 0;
  for (std::uint64_t J : J_grid) {
    for (++j; j <= J; ++j)
      if (beta[j] != 0) column += static_cast<double>(beta[j]) * inv_pow(static_cast<double>(j), s);
    j = J;
    min_col = std::min(min_col, std::abs(column));
    max_col_dev = std::max(max_col_dev, std::abs(column - reference));
    r.series.rows.push_back({static_cast<double>(J), 1.0, std::abs(column), std::abs(column - reference)});
  }

  std::string source;
  const double threshold = column_threshold_for(zero_index, std::abs(reference), cfg, &source);
  r.metrics.set("eta_residual", std::abs(eta_value))
      .set("max_row_order_abs", max_row)
      .set("row_vanish_threshold", cfg.row_vanish_threshold)
      .set("rows_vanish", max_row < cfg.row_vanish_threshold)
      .set("min_column_abs", min_col)
      .set("max_column_minus_reference", max_col_dev)
      .set("reference", reference)
      .set("reference_abs", std::abs(reference))
      .set("reference_evaluator", evaluator)
      .set("column_threshold", threshold)
      .set("column_threshold_source", source)
      .set("columns_separated", min_col > threshold);
  return r;
}

// ---------------------------------------------------------------------------
// Trivial zeros and the zero-free grid

inline AuditReport check_trivial_zeros(int k_max, const AuditConfig& cfg = {}) {
  if (k_max < 1 || k_max > 5) throw usage_error("trivial25 supports 1 <= k_max <= 5");
  AuditReport r{ClaimId::TrivialZeros25, {}, {}, Verdict::Pass, {{"s", "abs_zeta_global", "abs_zeta_em"}, {}}};
  r.params.set("k_max", k_max).set("tol", cfg.trivial_zero_tol);
  bool all_exact = true;
  double worst_em = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const EvalPoint s(-2.0 * k);
    const complex g = zeta_global(s, std::max(cfg.eval_tol, kMinTolerance)).value;
    const double em = std::abs(zeta_em(s, std::max(cfg.eval_tol, kMinTolerance)).value);
    all_exact = all_exact && g == complex(0.0, 0.0);
    worst_em = std::max(worst_em, em);
    r.series.rows.push_back({-2.0 * k, std::abs(g), em});
  }
  const bool ok = all_exact && worst_em < cfg.trivial_zero_tol;
  const complex control = zeta_global(EvalPoint(-3.0), std::max(cfg.eval_tol, kMinTolerance)).value;
  const bool control_ok = std::abs(control) > cfg.odd_control_min;
  r.metrics.set("all_exact_zero", all_exact)
      .set("max_abs_zeta_em", worst_em)
      .set("zeta_minus3", control)
      .set("odd_control_nonzero", control_ok);
  r.verdict = (ok && control_ok) ? Verdict::Pass : Verdict::Fail;
  return r;
}

inline std::vector<double> default_zero_free_sigmas() {
  std::vector<double> out;
  for (int i = 10; i <= 45; i += 5) out.push_back(i / 100.0);
  for (int i = 55; i <= 90; i += 5) out.push_back(i / 100.0);
  return out;
}

inline std::vector<double> default_zero_free_ts() {
  std::vector<double> out;
  for (int i = 20; i <= 300; ++i) out.push_back(i / 10.0);
  return out;
}

inline AuditReport check_zero_free_region(const std::vector<double>& sigma_grid, const std::vector<double>& t_grid,
                                          std::optional<double> margin = std::nullopt, const AuditConfig& cfg = {}) {
  detail::require_grid(sigma_grid, "sigma grid");
  detail::require_grid(t_grid, "t grid");
  constexpr double slack = 1e-9;
  for (double sigma : sigma_grid) {
    if (std::abs(sigma - 0.5) < cfg.zero_exclusion - slack)
      throw usage_error("sigma grid must stay " + std::to_string(cfg.zero_exclusion) + " away from the critical line");
    if (sigma < kEmSigmaMin || sigma > kEmSigmaMax) throw usage_error("sigma grid outside the validated box");
  }
  for (double t : t_grid)
    if (std::abs(t) > kEmAbsTMax) throw usage_error("t grid outside the validated box");
  for (double sigma : sigma_grid)
    for (double t : t_grid)
      if (std::abs(complex(sigma, t) - 1.0) < cfg.zero_exclusion)
        throw usage_error("grid enters the disk around s = 1");

  const double limit = margin.value_or(cfg.zero_free_margin);
  AuditReport r{ClaimId::ZeroFree24, {}, {}, Verdict::Pass, {{"sigma", "min_abs_zeta", "argmin_t"}, {}}};
  r.params.set("sigma_points", static_cast<std::int64_t>(sigma_grid.size()))
      .set("t_points", static_cast<std::int64_t>(t_grid.size()))
      .set("sigma_min", sigma_grid.front())
      .set("sigma_max", sigma_grid.back())
      .set("t_min", t_grid.front())
      .set("t_max", t_grid.back())
      .set("margin", limit)
      .set("margin_source", margin ? std::string("command line") : cfg.zero_free_margin_source);

  double best = std::numeric_limits<double>::infinity();
  complex best_at{};
  std::int64_t flagged = 0;
  for (double sigma : sigma_grid) {
    double row_best = std::numeric_limits<double>::infinity();
    double row_t = 0.0;
    for (double t : t_grid) {
      const double v = std::abs(zeta_global(EvalPoint(sigma, t), std::max(cfg.eval_tol, kMinTolerance)).value);
      if (!(v > limit)) ++flagged;
      if (v < row_best) {
        row_best = v;
        row_t = t;
      }
    }
    r.series.rows.push_back({sigma, row_best, row_t});
    if (row_best < best) {
      best = row_best;
      best_at = {sigma, row_t};
    }
  }
  r.metrics.set("min_abs_zeta", best).set("argmin", best_at).set("flagged_points", flagged);
  r.verdict = best > limit ? Verdict::Pass : Verdict::Fail;
  return r;
}

}  // namespace zetalab
