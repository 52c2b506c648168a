#include "sigmalucas/sigma3.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "sigmalucas/arith.hpp"

namespace sigmalucas::sigma3 {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// (1 + p^3 + ... + p^(3e)) mod m.
std::uint64_t prime_power_sigma3_mod(std::uint64_t p, unsigned e, std::uint64_t m) {
  const std::uint64_t p3 = mulmod(mulmod(p % m, p % m, m), p % m, m);
  std::uint64_t term = 1 % m;
  std::uint64_t sum = term;
  for (unsigned i = 0; i < e; ++i) {
    term = mulmod(term, p3, m);
    sum = (sum + term) % m;
  }
  return sum;
}

// n = p^a q^b divides sigma_3(n).
bool two_prime_divides(std::uint64_t p, unsigned a, std::uint64_t q, unsigned b, std::uint64_t n) {
  return mulmod(prime_power_sigma3_mod(p, a, n), prime_power_sigma3_mod(q, b, n), n) == 0;
}

}  // namespace

bool divides_sigma3(const Int& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("divides_sigma3: n must be >= 1");
  const Int s = arith::sigma_k(n, 3);
  return mpz_divisible_p(s.get_mpz_t(), n.get_mpz_t()) != 0;
}

std::vector<Sigma3Hit> scan_pq_alpha(std::uint64_t bound, bool restrict_q, unsigned workers) {
  if (bound < 6) return {};
  const auto primes = arith::primes_up_to(bound / 2);
  const unsigned pool = std::max(1U, workers);

  std::vector<std::vector<Sigma3Hit>> found(pool);
  auto body = [&](unsigned w) {
    for (std::size_t qi = w; qi < primes.size(); qi += pool) {
      const std::uint64_t q = primes[qi];
      if (restrict_q && q % 3 == 1) continue;
      std::uint64_t qa = q;
      for (unsigned alpha = 1; qa <= bound / 2; ++alpha) {
        const std::uint64_t p_max = bound / qa;
        for (std::uint64_t p : primes) {
          if (p > p_max) break;
          if (p == q) continue;
          const std::uint64_t n = p * qa;
          if (two_prime_divides(p, 1, q, alpha, n)) {
            found[w].push_back({n, p, q, alpha, arith::is_even_perfect(from_u64(n))});
          }
        }
        if (qa > bound / q) break;
        qa *= q;
      }
    }
  };
  if (pool == 1) {
    body(0);
  } else {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < pool; ++w) threads.emplace_back(body, w);
  }

  std::vector<Sigma3Hit> hits;
  for (auto& local : found) hits.insert(hits.end(), local.begin(), local.end());
  std::sort(hits.begin(), hits.end(), [](const Sigma3Hit& a, const Sigma3Hit& b) {
    return std::tie(a.n, a.q, a.alpha) < std::tie(b.n, b.q, b.alpha);
  });
  hits.erase(std::unique(hits.begin(), hits.end(), [](const Sigma3Hit& a, const Sigma3Hit& b) { return a.n == b.n; }),
             hits.end());
  return hits;
}

std::vector<ConjectureHit> conjecture_scan(std::uint64_t bound) {
  std::vector<ConjectureHit> hits;
  if (bound < 6) return hits;
  const auto primes = arith::primes_up_to(bound / 2);
  // n = p^a q^b with p < q: p^a * q <= bound.
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const std::uint64_t p = primes[pi];
    if (p > bound / p) break;
    std::uint64_t pa = p;
    for (unsigned a = 1;; ++a) {
      for (std::size_t qi = pi + 1; qi < primes.size(); ++qi) {
        const std::uint64_t q = primes[qi];
        if (q > bound / pa) break;
        std::uint64_t n = pa * q;
        for (unsigned b = 1;; ++b) {
          if (two_prime_divides(p, a, q, b, n)) hits.push_back({n, arith::is_even_perfect(from_u64(n))});
          if (n > bound / q) break;
          n *= q;
        }
      }
      if (pa > bound / p) break;
      pa *= p;
    }
  }
  std::sort(hits.begin(), hits.end(), [](const ConjectureHit& a, const ConjectureHit& b) { return a.n < b.n; });
  return hits;
}

}  // namespace sigmalucas::sigma3
