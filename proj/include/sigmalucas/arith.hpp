#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sigmalucas/integer.hpp"

// Exact integer services: primality, factorization, divisor-power sums and
// the segmented sigma_2 sieve that drives brute-force equation scans.
namespace sigmalucas::arith {

struct PrimePower {
  Int prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes. Empty for 1.
struct Factorization {
  std::vector<PrimePower> factors;

  Int value() const;
  bool empty() const { return factors.empty(); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

enum class Primality { composite, prime, probable_prime };

/// Values below this are certified by deterministic Miller-Rabin.
inline const Int kDeterministicPrimalityLimit = Int("18446744073709551616");

inline constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

/// Largest argument accepted by sigma2_segment (sigma_2(n) < 1.645 n^2 must fit 64 bits).
inline constexpr std::uint64_t kSigma2Limit = 3'000'000'000ULL;

inline constexpr std::size_t kDefaultBlockSize = std::size_t{1} << 20;

bool is_prime_u64(std::uint64_t n);

/// `prime` below 2^64, `probable_prime` above it when the strong tests pass.
Primality primality(const Int& n);

inline bool is_prime(const Int& n) { return primality(n) != Primality::composite; }

/// Ascending primes <= limit (Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Trial division to 10^6, then Brent's Pollard rho with recursive splitting.
/// Throws std::invalid_argument for n < 1.
Factorization factorize(const Int& n);

/// Sum of d^k over divisors d of n.
Int sigma_k(const Int& n, unsigned k);
Int sigma_k(const Factorization& f, unsigned k);

/// Block size from SIGMALUCAS_BLOCK_SIZE, else 2^20.
std::size_t default_block_size();

/// sigma_2(lo + i) for lo <= lo + i < hi. Throws std::length_error when
/// hi - lo exceeds block_size and std::invalid_argument on a bad range.
std::vector<std::uint64_t> sigma2_segment(std::uint64_t lo, std::uint64_t hi,
                                          std::size_t block_size = default_block_size());

/// In-place variant for callers that reuse a buffer; out.size() == hi - lo.
void sigma2_segment_into(std::uint64_t lo, std::uint64_t hi, std::span<std::uint64_t> out);

bool is_squarefree(const Int& n);

/// n = 2^(a-1) (2^a - 1) with 2^a - 1 prime.
bool is_even_perfect(const Int& n);

}  // namespace sigmalucas::arith
