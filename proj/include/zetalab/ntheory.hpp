#pragma once

// Exact integer arithmetic: smallest-prime-factor sieve, Omega, the Liouville
// sign, divisor enumeration and the divisor sum
//
//   beta(n) = sum_{d | n} (-1)^{n/d + 1} (-1)^{Omega(d)}
//
// in its term-by-term form and its closed form (1 on squares, -2 on twice
// squares, 0 elsewhere).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

inline constexpr std::uint64_t kDefaultSieveLimit = 10'000'000;
inline constexpr std::uint64_t kMaxSieveLimit = 100'000'000;

/// Floor of the square root, computed by integer Newton iteration.
/// Result r satisfies r*r <= n < (r+1)*(r+1) for every 64-bit n.
constexpr std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  // Initial guess is a power of two >= sqrt(n), so the iteration decreases
  // monotonically and stops at the floor.
  const int shift = (std::bit_width(n) + 1) / 2;
  std::uint64_t x = std::uint64_t{1} << shift;
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

/// Smallest-prime-factor table over [2, limit], built by a linear sieve.
class FactorSieve {
 public:
  explicit FactorSieve(std::uint64_t limit) : limit_(limit) {
    if (limit < 2) throw bounds_error("sieve limit must be >= 2");
    if (limit > kMaxSieveLimit)
      throw bounds_error("sieve limit " + std::to_string(limit) + " exceeds cap " +
                         std::to_string(kMaxSieveLimit));
    spf_.assign(limit + 1, 0);
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        spf_[i] = i;
        primes_.push_back(i);
      }
      for (std::uint32_t p : primes_) {
        const std::uint64_t multiple = std::uint64_t{p} * i;
        if (p > spf_[i] || multiple > limit) break;
        spf_[multiple] = p;
      }
    }
  }

  std::uint64_t limit() const noexcept { return limit_; }

  /// Smallest prime factor of n, 2 <= n <= limit.
  std::uint32_t spf(std::uint64_t n) const {
    if (n < 2 || n > limit_) throw bounds_error(range_message(n));
    return spf_[n];
  }

  bool is_prime(std::uint64_t n) const { return n >= 2 && spf(n) == n; }

  const std::vector<std::uint32_t>& primes() const noexcept { return primes_; }

  /// Prime factorization as (prime, exponent) pairs, primes ascending.
  std::vector<std::pair<std::uint32_t, int>> factorize(std::uint64_t n) const {
    check(n);
    std::vector<std::pair<std::uint32_t, int>> out;
    while (n > 1) {
      const std::uint32_t p = spf_[n];
      int e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }

  void check(std::uint64_t n) const {
    if (n < 1 || n > limit_) throw bounds_error(range_message(n));
  }

 private:
  std::string range_message(std::uint64_t n) const {
    return "n = " + std::to_string(n) + " outside sieve range [1, " + std::to_string(limit_) + "]";
  }

  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Build a sieve; throws bounds_error when limit < 2 or above the cap.
inline FactorSieve build_sieve(std::uint64_t limit) { return FactorSieve(limit); }

/// Number of prime factors of n counted with multiplicity. Omega(1) = 0.
inline int big_omega(const FactorSieve& sieve, std::uint64_t n) {
  sieve.check(n);
  int count = 0;
  while (n > 1) {
    n /= sieve.spf(n);
    ++count;
  }
  return count;
}

/// (-1)^Omega(n).
inline int liouville(const FactorSieve& sieve, std::uint64_t n) {
  return big_omega(sieve, n) % 2 == 0 ? 1 : -1;
}

/// Positive divisors of n in ascending order, generated from exponent vectors.
inline std::vector<std::uint64_t> divisors(const FactorSieve& sieve, std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : sieve.factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// beta(n) summed term by term over the divisors of n.
inline int beta_bruteforce(const FactorSieve& sieve, std::uint64_t n) {
  int total = 0;
  for (std::uint64_t d : divisors(sieve, n)) {
    const int cofactor_sign = ((n / d) % 2 == 1) ? 1 : -1;  // (-1)^{n/d + 1}
    total += cofactor_sign * liouville(sieve, d);
  }
  return total;
}

/// beta(1..N) from the same divisor-sum definition, accumulated over
/// multiples instead of per-n divisor lists. Index 0 is unused.
inline std::vector<int> beta_table(const FactorSieve& sieve, std::uint64_t N) {
  if (N > sieve.limit()) throw bounds_error("beta_table bound exceeds sieve limit");
  std::vector<signed char> lambda(N + 1, 1);
  for (std::uint64_t n = 2; n <= N; ++n) lambda[n] = static_cast<signed char>(-lambda[n / sieve.spf(n)]);
  std::vector<int> beta(N + 1, 0);
  for (std::uint64_t d = 1; d <= N; ++d) {
    const int l = lambda[d];
    std::uint64_t q = 1;
    for (std::uint64_t n = d; n <= N; n += d, ++q) beta[n] += (q % 2 == 1) ? l : -l;
  }
  return beta;
}

enum class BetaKind { Square, TwiceSquare, Neither };

/// Which of the three cases of the closed form applies to n.
struct BetaClass {
  BetaKind kind = BetaKind::Neither;
  std::uint64_t root = 0;  // m with n = m^2 or n = 2 m^2; 0 for Neither

  friend bool operator==(const BetaClass&, const BetaClass&) = default;

  std::string to_string() const {
    switch (kind) {
      case BetaKind::Square: return "Square(" + std::to_string(root) + ")";
      case BetaKind::TwiceSquare: return "TwiceSquare(" + std::to_string(root) + ")";
      case BetaKind::Neither: break;
    }
    return "Neither";
  }
};

inline BetaClass classify(std::uint64_t n) {
  if (n == 0) throw domain_error("classify requires n >= 1");
  const std::uint64_t r = isqrt(n);
  if (r * r == n) return {BetaKind::Square, r};
  if (n % 2 == 0) {
    const std::uint64_t half = n / 2;
    const std::uint64_t h = isqrt(half);
    if (h * h == half) return {BetaKind::TwiceSquare, h};
  }
  return {BetaKind::Neither, 0};
}

inline int beta_closed(std::uint64_t n) {
  switch (classify(n).kind) {
    case BetaKind::Square: return 1;
    case BetaKind::TwiceSquare: return -2;
    case BetaKind::Neither: break;
  }
  return 0;
}

}  // namespace zetalab
