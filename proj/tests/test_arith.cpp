#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"
#include "sigmalucas/arith.hpp"

using namespace sigmalucas;
using namespace sigmalucas::arith;

TEST_CASE("is_prime examples") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(233));
  CHECK_FALSE(is_prime(20737));
}

TEST_CASE("is_prime agrees with trial division below 10^5") {
  for (std::uint64_t n = 0; n <= 100'000; ++n) REQUIRE(is_prime_u64(n) == oracle::is_prime(n));
}

TEST_CASE("strong pseudoprimes to small bases are rejected") {
  // 3215031751 = 151*751*28351 fools bases 2,3,5,7; 3825123056546413051 fools 2..23.
  CHECK_FALSE(is_prime_u64(3215031751ULL));
  CHECK_FALSE(is_prime_u64(3825123056546413051ULL));
  CHECK_FALSE(is_prime_u64(18446744073709551615ULL));
  CHECK(is_prime_u64(18446744073709551557ULL));  // largest prime below 2^64
}

TEST_CASE("primality labels values beyond 2^64 as probable") {
  const Int mersenne127 = (Int(1) << 127) - 1;
  CHECK(primality(mersenne127) == Primality::probable_prime);
  CHECK(primality(mersenne127 * 3) == Primality::composite);
  CHECK(primality(Int(233)) == Primality::prime);
  CHECK(primality(Int(-7)) == Primality::composite);
}

TEST_CASE("factorize examples") {
  CHECK(factorize(1).empty());
  CHECK(factorize(496) == Factorization{{{2, 4}, {31, 1}}});
  CHECK(factorize(20737) == Factorization{{{89, 1}, {233, 1}}});
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize reconstructs every n up to 10^5") {
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    const auto f = factorize(from_u64(n));
    REQUIRE(f.value() == from_u64(n));
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      REQUIRE(f.factors[i].exponent >= 1);
      REQUIRE(is_prime(f.factors[i].prime));
      if (i > 0) REQUIRE(f.factors[i - 1].prime < f.factors[i].prime);
    }
  }
}

TEST_CASE("factorize splits products of large primes via rho") {
  // Both factors exceed the trial-division limit.
  const Int p("1000000007"), q("998244353"), r("4294967291");
  CHECK(factorize(p * q) == Factorization{{{q, 1}, {p, 1}}});
  CHECK(factorize(p * p * r) == Factorization{{{p, 2}, {r, 1}}});
  // Beyond 64 bits.
  const Int big = Int("18446744073709551557") * Int("1000000000039");
  CHECK(factorize(big) == Factorization{{{Int("1000000000039"), 1}, {Int("18446744073709551557"), 1}}});
}

TEST_CASE("random 64-bit semiprimes factor correctly") {
  std::mt19937_64 rng(20260101);
  int done = 0;
  while (done < 20) {
    const std::uint64_t a = (rng() % 2'000'000'000ULL) | 1;
    const std::uint64_t b = (rng() % 2'000'000'000ULL) | 1;
    if (!is_prime_u64(a) || !is_prime_u64(b)) continue;
    const auto f = factorize(from_u64(a) * from_u64(b));
    REQUIRE(f.value() == from_u64(a) * from_u64(b));
    for (const auto& pp : f.factors) REQUIRE(is_prime(pp.prime));
    ++done;
  }
}

TEST_CASE("sigma_k examples") {
  CHECK(sigma_k(10, 2) == 130);
  CHECK(sigma_k(1, 3) == 1);
  CHECK(sigma_k(6, 3) == 252);
  CHECK(sigma_k(12, 0) == 6);
  CHECK_THROWS_AS(sigma_k(0, 1), std::invalid_argument);
}

TEST_CASE("sigma_k matches the divisor loop for n <= 10^4, k = 1..3") {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    for (unsigned k = 1; k <= 3; ++k) REQUIRE(sigma_k(from_u64(n), k) == oracle::divisor_power_sum(n, k));
  }
}

TEST_CASE("sigma2_segment examples") {
  CHECK(sigma2_segment(1, 4) == std::vector<std::uint64_t>{1, 5, 10});
  CHECK(sigma2_segment(10, 11) == std::vector<std::uint64_t>{130});
  CHECK(sigma2_segment(65, 66) == std::vector<std::uint64_t>{4420});
}

TEST_CASE("sigma2_segment errors") {
  CHECK_THROWS_AS(sigma2_segment(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(sigma2_segment(5, 5), std::invalid_argument);
  CHECK_THROWS_AS(sigma2_segment(1, 100, 10), std::length_error);
  CHECK_THROWS_AS(sigma2_segment(kSigma2Limit, kSigma2Limit + 2), std::invalid_argument);
}

TEST_CASE("sigma2_segment blocks covering [1, 10^5] agree with sigma_k") {
  for (std::size_t block : {std::size_t{1}, std::size_t{7}, std::size_t{4096}, std::size_t{100'000}}) {
    for (std::uint64_t lo = 1; lo <= 100'000; lo += block) {
      const std::uint64_t hi = std::min<std::uint64_t>(lo + block, 100'001);
      const auto seg = sigma2_segment(lo, hi, block);
      for (std::uint64_t n = lo; n < hi; ++n) {
        if (block == 4096) {
          REQUIRE(from_u64(seg[n - lo]) == sigma_k(from_u64(n), 2));
        } else {
          REQUIRE(seg[n - lo] == oracle::sigma2_pairs(n));
        }
      }
    }
  }
}

TEST_CASE("sigma2_segment near the 64-bit limit") {
  const std::uint64_t lo = kSigma2Limit - 50;
  const auto seg = sigma2_segment(lo, kSigma2Limit + 1);
  for (std::uint64_t n = lo; n <= kSigma2Limit; ++n) REQUIRE(from_u64(seg[n - lo]) == sigma_k(from_u64(n), 2));
}

TEST_CASE("block size comes from the environment") {
  ::setenv("SIGMALUCAS_BLOCK_SIZE", "4096", 1);
  CHECK(default_block_size() == 4096);
  ::setenv("SIGMALUCAS_BLOCK_SIZE", "junk", 1);
  CHECK(default_block_size() == kDefaultBlockSize);
  ::unsetenv("SIGMALUCAS_BLOCK_SIZE");
  CHECK(default_block_size() == kDefaultBlockSize);
}

TEST_CASE("is_squarefree examples") {
  CHECK(is_squarefree(5));
  CHECK_FALSE(is_squarefree(8));
  CHECK(is_squarefree(13));
  CHECK(is_squarefree(1));
  CHECK_FALSE(is_squarefree(4 * 9 * 7));
}

TEST_CASE("is_even_perfect examples and sigma_1 agreement") {
  CHECK(is_even_perfect(6));
  CHECK(is_even_perfect(28));
  CHECK_FALSE(is_even_perfect(12));
  CHECK_FALSE(is_even_perfect(1));
  for (std::uint64_t n = 2; n <= 10'000; n += 2) {
    REQUIRE(is_even_perfect(from_u64(n)) == (oracle::divisor_power_sum(n, 1) == 2 * n));
  }
  // 2^60 (2^61 - 1)
  CHECK(is_even_perfect((Int(1) << 60) * ((Int(1) << 61) - 1)));
  CHECK_FALSE(is_even_perfect((Int(1) << 10) * ((Int(1) << 11) - 1)));  // 2047 = 23 * 89
}
