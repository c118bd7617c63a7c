#include <gtest/gtest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "zetalab/ntheory.hpp"

using namespace zetalab;

namespace {

// Trial-division oracles, independent of the sieve.
std::vector<std::uint64_t> divisors_by_scan(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

int omega_by_trial_division(std::uint64_t n) {
  int count = 0;
  for (std::uint64_t p = 2; p * p <= n; ++p)
    while (n % p == 0) {
      n /= p;
      ++count;
    }
  return count + (n > 1 ? 1 : 0);
}

const FactorSieve& shared_sieve() {
  static const FactorSieve sieve(1'000'000);
  return sieve;
}

}  // namespace

TEST(Sieve, SmallestPrimeFactorExamples) {
  const FactorSieve s10 = build_sieve(10);
  EXPECT_EQ(s10.spf(4), 2u);
  EXPECT_EQ(s10.spf(9), 3u);
  EXPECT_EQ(s10.spf(7), 7u);
  EXPECT_EQ(build_sieve(2).spf(2), 2u);
  const FactorSieve s30 = build_sieve(30);
  EXPECT_EQ(s30.spf(15), 3u);
  EXPECT_EQ(s30.spf(25), 5u);
}

TEST(Sieve, RejectsBadLimits) {
  EXPECT_THROW(build_sieve(1), bounds_error);
  EXPECT_THROW(build_sieve(0), bounds_error);
  EXPECT_THROW(build_sieve(kMaxSieveLimit + 1), bounds_error);
}

TEST(Sieve, InvariantsHoldUpToLimit) {
  const FactorSieve sieve(20'000);
  for (std::uint64_t n = 2; n <= sieve.limit(); ++n) {
    const std::uint32_t p = sieve.spf(n);
    ASSERT_EQ(n % p, 0u) << n;
    const bool prime = omega_by_trial_division(n) == 1;
    ASSERT_EQ(p == n, prime) << n;
    // p is the smallest factor: nothing in [2, p) divides n.
    for (std::uint64_t q = 2; q < p && q * q <= n; ++q) ASSERT_NE(n % q, 0u) << n;
    std::uint64_t product = 1;
    for (const auto& [prime_factor, e] : sieve.factorize(n))
      for (int i = 0; i < e; ++i) product *= prime_factor;
    ASSERT_EQ(product, n);
  }
}

TEST(Sieve, OutOfRangeQueries) {
  const FactorSieve sieve(100);
  EXPECT_THROW(big_omega(sieve, 0), bounds_error);
  EXPECT_THROW(big_omega(sieve, 101), bounds_error);
  EXPECT_THROW(liouville(sieve, 101), bounds_error);
  EXPECT_THROW(divisors(sieve, 101), bounds_error);
  EXPECT_THROW(beta_bruteforce(sieve, 101), bounds_error);
}

TEST(BigOmega, Examples) {
  const FactorSieve sieve(2000);
  EXPECT_EQ(big_omega(sieve, 1), 0);
  EXPECT_EQ(big_omega(sieve, 12), omega_by_trial_division(12));
  EXPECT_EQ(big_omega(sieve, 12), 3);
  EXPECT_EQ(big_omega(sieve, 1024), 10);
}

TEST(Liouville, Examples) {
  const FactorSieve sieve(100);
  EXPECT_EQ(liouville(sieve, 1), 1);
  EXPECT_EQ(liouville(sieve, 2), -1);
  EXPECT_EQ(liouville(sieve, 12), -1);
}

TEST(BigOmega, CompletelyAdditive) {
  const FactorSieve& sieve = shared_sieve();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::uint64_t> pick(1, 1000);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::uint64_t a = pick(rng);
    const std::uint64_t b = pick(rng);
    ASSERT_EQ(big_omega(sieve, a * b), big_omega(sieve, a) + big_omega(sieve, b)) << a << "*" << b;
    ASSERT_EQ(liouville(sieve, a * b), liouville(sieve, a) * liouville(sieve, b));
  }
}

TEST(Divisors, Examples) {
  const FactorSieve sieve(100);
  EXPECT_EQ(divisors(sieve, 1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(sieve, 6), (std::vector<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_EQ(divisors(sieve, 12), divisors_by_scan(12));
}

TEST(Divisors, MatchScanAndDivisorCount) {
  const FactorSieve sieve(5000);
  for (std::uint64_t n = 1; n <= sieve.limit(); ++n) {
    const auto d = divisors(sieve, n);
    ASSERT_EQ(d, divisors_by_scan(n)) << n;
    std::uint64_t tau = 1;
    for (const auto& [p, e] : sieve.factorize(n)) tau *= static_cast<std::uint64_t>(e + 1);
    ASSERT_EQ(d.size(), tau) << n;
  }
}

TEST(Isqrt, Examples) {
  EXPECT_EQ(isqrt(0), 0u);
  EXPECT_EQ(isqrt(15), 3u);
  EXPECT_EQ(isqrt(10'000'000'000'000'000ULL), 100'000'000u);
}

TEST(Isqrt, FloorPropertyAcrossRanges) {
  std::mt19937_64 rng(11);
  auto check = [](std::uint64_t n) {
    const unsigned __int128 r = isqrt(n);
    ASSERT_LE(r * r, n) << n;
    ASSERT_GT((r + 1) * (r + 1), n) << n;
  };
  for (std::uint64_t n = 0; n < 100'000; ++n) check(n);
  for (int i = 0; i < 100'000; ++i) check(rng());
  // Neighbourhood of 2^53 and of large perfect squares, where a double sqrt rounds.
  for (std::uint64_t n = (1ULL << 53) - 1000; n < (1ULL << 53) + 1000; ++n) check(n);
  const std::uint64_t big = 4'294'967'295ULL;  // 2^32 - 1
  for (std::uint64_t d : {0ULL, 1ULL, 2ULL}) {
    check(big * big - d);
    check(big * big + d);
  }
  check(~0ULL);
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(1), (BetaClass{BetaKind::Square, 1}));
  EXPECT_EQ(classify(50), (BetaClass{BetaKind::TwiceSquare, 5}));
  EXPECT_EQ(classify(12), (BetaClass{BetaKind::Neither, 0}));
  EXPECT_EQ(classify(50).to_string(), "TwiceSquare(5)");
  EXPECT_THROW(classify(0), domain_error);
}

TEST(Classify, PartitionsNaturals) {
  for (std::uint64_t n = 1; n <= 200'000; ++n) {
    const BetaClass c = classify(n);
    const bool square = [&] {
      for (std::uint64_t m = 1; m * m <= n; ++m)
        if (m * m == n) return true;
      return false;
    }();
    const bool twice = n % 2 == 0 && [&] {
      for (std::uint64_t m = 1; 2 * m * m <= n; ++m)
        if (2 * m * m == n) return true;
      return false;
    }();
    ASSERT_FALSE(square && twice) << n;
    if (c.kind == BetaKind::Square) {
      ASSERT_TRUE(square);
      ASSERT_EQ(c.root, isqrt(n));
      ASSERT_EQ(c.root * c.root, n);
    } else if (c.kind == BetaKind::TwiceSquare) {
      ASSERT_TRUE(twice);
      ASSERT_EQ(2 * c.root * c.root, n);
    } else {
      ASSERT_FALSE(square || twice) << n;
    }
  }
}

TEST(Classify, LargeValuesNearDoubleRounding) {
  const std::uint64_t m = 94'906'267;  // m^2 just above 2^53
  EXPECT_EQ(classify(m * m).kind, BetaKind::Square);
  EXPECT_EQ(classify(m * m + 1).kind, BetaKind::Neither);
  EXPECT_EQ(classify(m * m - 1).kind, BetaKind::Neither);
  EXPECT_EQ(classify(2 * m * m), (BetaClass{BetaKind::TwiceSquare, m}));
}

TEST(Beta, BruteForceExamples) {
  const FactorSieve sieve(100);
  EXPECT_EQ(beta_bruteforce(sieve, 1), 1);
  EXPECT_EQ(beta_bruteforce(sieve, 2), -2);
  EXPECT_EQ(beta_bruteforce(sieve, 6), 0);
  EXPECT_EQ(beta_bruteforce(sieve, 9), 1);  // +1 -1 +1 over {1, 3, 9}
}

TEST(Beta, ClosedFormExamples) {
  EXPECT_EQ(beta_closed(16), 1);
  EXPECT_EQ(beta_closed(8), -2);
  EXPECT_EQ(beta_closed(7), 0);
}

TEST(Beta, BruteForceEqualsClosedFormUpToOneMillion) {
  const FactorSieve& sieve = shared_sieve();
  for (std::uint64_t n = 1; n <= 1'000'000; ++n) ASSERT_EQ(beta_bruteforce(sieve, n), beta_closed(n)) << n;
}

TEST(Beta, TableMatchesPerNumberSum) {
  const FactorSieve sieve(50'000);
  const auto table = beta_table(sieve, 50'000);
  for (std::uint64_t n = 1; n <= 50'000; ++n) ASSERT_EQ(table[n], beta_bruteforce(sieve, n)) << n;
  EXPECT_THROW(beta_table(sieve, 50'001), bounds_error);
}

TEST(Beta, OddPrimePowers) {
  const FactorSieve& sieve = shared_sieve();
  for (std::uint32_t p : sieve.primes()) {
    if (p == 2) continue;
    if (p > 1000) break;
    std::uint64_t pa = 1;
    for (int a = 0; pa <= 1'000'000; ++a, pa *= p) ASSERT_EQ(beta_bruteforce(sieve, pa), a % 2 == 0 ? 1 : 0);
  }
}

TEST(Beta, MultiplicativeStepOnOddCoprimeParts) {
  const FactorSieve sieve(100'000);
  EXPECT_EQ(beta_bruteforce(sieve, 225), beta_bruteforce(sieve, 9) * beta_bruteforce(sieve, 25));
  EXPECT_EQ(beta_bruteforce(sieve, 225), 1);
  EXPECT_EQ(beta_bruteforce(sieve, 15), 0);
  EXPECT_EQ(beta_bruteforce(sieve, 25), 1);
  std::mt19937_64 rng(3);
  int checked = 0;
  while (checked < 3000) {
    const std::uint32_t p = sieve.primes()[1 + rng() % 60];
    const int a = 1 + static_cast<int>(rng() % 3);
    std::uint64_t pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    const std::uint64_t m = 2 * (rng() % 500) + 1;
    if (m % p == 0 || pa * m > sieve.limit()) continue;
    ASSERT_EQ(beta_bruteforce(sieve, pa * m), beta_bruteforce(sieve, pa) * beta_bruteforce(sieve, m))
        << p << "^" << a << " * " << m;
    ++checked;
  }
}
