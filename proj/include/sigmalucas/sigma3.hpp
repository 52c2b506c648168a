#pragma once

#include <cstdint>
#include <vector>

#include "sigmalucas/integer.hpp"

// Harness for n | sigma_3(n) over integers with two distinct prime factors.
namespace sigmalucas::sigma3 {

struct Sigma3Hit {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  unsigned alpha = 0;  // n = p * q^alpha
  bool even_perfect = false;
};

struct ConjectureHit {
  std::uint64_t n = 0;
  bool even_perfect = false;

  friend bool operator==(const ConjectureHit&, const ConjectureHit&) = default;
};

bool divides_sigma3(const Int& n);

/// Every n = p q^alpha <= bound (p != q primes, alpha >= 1, and q != 1 mod 3
/// when restrict_q) with n | sigma_3(n), ascending and unique in n.
std::vector<Sigma3Hit> scan_pq_alpha(std::uint64_t bound, bool restrict_q, unsigned workers = 1);

/// Every n <= bound with exactly two distinct prime factors and n | sigma_3(n).
std::vector<ConjectureHit> conjecture_scan(std::uint64_t bound);

}  // namespace sigmalucas::sigma3
