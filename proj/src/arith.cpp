#include "sigmalucas/arith.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmalucas::arith {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

// Strong probable-prime test to base a; n odd, n > a.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

const std::vector<std::uint64_t>& small_primes() {
  static const std::vector<std::uint64_t> primes = primes_up_to(kTrialDivisionLimit);
  return primes;
}

std::uint64_t abs_diff(std::uint64_t a, std::uint64_t b) { return a > b ? a - b : b - a; }

// Brent's cycle-finding variant of Pollard rho; may return n on failure.
std::uint64_t rho_brent(std::uint64_t n, std::uint64_t c) {
  const auto f = [n, c](std::uint64_t x) {
    return static_cast<std::uint64_t>((static_cast<u128>(x) * x + c) % n);
  };
  constexpr std::uint64_t batch = 128;
  std::uint64_t y = 2, r = 1, q = 1, g = 1, x = 0, ys = 0;
  do {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = f(y);
    std::uint64_t k = 0;
    do {
      ys = y;
      const std::uint64_t steps = std::min(batch, r - k);
      for (std::uint64_t i = 0; i < steps; ++i) {
        y = f(y);
        q = mulmod(q, abs_diff(x, y), n);
      }
      g = std::gcd(q, n);
      k += batch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      g = std::gcd(abs_diff(x, ys), n);
    } while (g == 1);
  }
  return g;
}

Int rho_brent(const Int& n, unsigned long c) {
  const auto f = [&n, c](const Int& x) {
    Int t = x * x + c;
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    return t;
  };
  constexpr unsigned long batch = 128;
  Int y = 2, q = 1, g = 1, x, ys;
  unsigned long r = 1;
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = f(y);
    unsigned long k = 0;
    do {
      ys = y;
      const unsigned long steps = std::min(batch, r - k);
      for (unsigned long i = 0; i < steps; ++i) {
        y = f(y);
        Int d = abs(x - y);
        q = q * d;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += batch;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = f(ys);
      Int d = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

// Composite m with no prime factor below the trial-division limit.
Int find_factor(const Int& m) {
  for (unsigned long c = 1;; ++c) {
    Int g = fits_u64(m) ? from_u64(rho_brent(to_u64(m), c)) : rho_brent(m, c);
    if (g > 1 && g < m) return g;
  }
}

void split_cofactor(const Int& m, std::vector<Int>& primes) {
  if (m == 1) return;
  if (is_prime(m)) {
    primes.push_back(m);
    return;
  }
  Int root;
  if (mpz_root(root.get_mpz_t(), m.get_mpz_t(), 2) != 0) {
    split_cofactor(root, primes);
    split_cofactor(root, primes);
    return;
  }
  const Int d = find_factor(m);
  split_cofactor(d, primes);
  split_cofactor(m / d, primes);
}

}  // namespace

Int Factorization::value() const {
  Int v = 1;
  for (const auto& [p, e] : factors) v *= ipow(p, e);
  return v;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : bases) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  return std::all_of(std::begin(bases), std::end(bases),
                     [n](std::uint64_t a) { return strong_probable_prime(n, a); });
}

Primality primality(const Int& n) {
  if (sgn(n) <= 0) return Primality::composite;
  if (fits_u64(n)) return is_prime_u64(to_u64(n)) ? Primality::prime : Primality::composite;
  // GMP 6.2: Baillie-PSW followed by (reps - 24) random-base Miller-Rabin rounds.
  return mpz_probab_prime_p(n.get_mpz_t(), 64) == 0 ? Primality::composite
                                                    : Primality::probable_prime;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

Factorization factorize(const Int& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("factorize: n must be >= 1, got " + to_string(n));

  std::map<Int, unsigned> counts;
  Int rest = n;
  if (fits_u64(rest)) {
    std::uint64_t m = to_u64(rest);
    for (std::uint64_t p : small_primes()) {
      if (p * p > m) break;
      while (m % p == 0) {
        m /= p;
        ++counts[from_u64(p)];
      }
    }
    rest = from_u64(m);
  } else {
    for (std::uint64_t p : small_primes()) {
      if (rest < from_u64(p) * p) break;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
        ++counts[from_u64(p)];
      }
    }
  }

  std::vector<Int> large;
  split_cofactor(rest, large);
  for (const auto& p : large) ++counts[p];

  Factorization f;
  f.factors.reserve(counts.size());
  for (const auto& [p, e] : counts) f.factors.push_back({p, e});
  return f;
}

Int sigma_k(const Factorization& f, unsigned k) {
  Int total = 1;
  for (const auto& [p, e] : f.factors) {
    const Int pk = ipow(p, k);
    Int term = 1;
    Int sum = 1;
    for (unsigned i = 0; i < e; ++i) {
      term *= pk;
      sum += term;
    }
    total *= sum;
  }
  return total;
}

Int sigma_k(const Int& n, unsigned k) { return sigma_k(factorize(n), k); }

std::size_t default_block_size() {
  const char* env = std::getenv("SIGMALUCAS_BLOCK_SIZE");
  if (env == nullptr) return kDefaultBlockSize;
  const std::string_view text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return kDefaultBlockSize;
  return value;
}

void sigma2_segment_into(std::uint64_t lo, std::uint64_t hi, std::span<std::uint64_t> out) {
  std::fill(out.begin(), out.end(), 0);
  // Divisor pairs (d, m/d) with d <= sqrt(m): each m receives both squares once.
  for (std::uint64_t d = 1; d * d < hi; ++d) {
    const std::uint64_t d2 = d * d;
    std::uint64_t first = std::max(lo, d2);
    std::uint64_t cofactor = (first + d - 1) / d;
    for (std::uint64_t m = cofactor * d; m < hi; m += d, ++cofactor) {
      std::uint64_t& slot = out[m - lo];
      slot += d2;
      if (cofactor != d) slot += cofactor * cofactor;
    }
  }
}

std::vector<std::uint64_t> sigma2_segment(std::uint64_t lo, std::uint64_t hi,
                                          std::size_t block_size) {
  if (lo < 1 || hi <= lo) {
    throw std::invalid_argument("sigma2_segment: need 1 <= lo < hi, got [" + std::to_string(lo) +
                                ", " + std::to_string(hi) + ")");
  }
  if (hi - 1 > kSigma2Limit) {
    throw std::invalid_argument("sigma2_segment: hi exceeds " + std::to_string(kSigma2Limit));
  }
  if (hi - lo > block_size) {
    throw std::length_error("sigma2_segment: range of " + std::to_string(hi - lo) +
                            " values exceeds block size " + std::to_string(block_size));
  }
  std::vector<std::uint64_t> out(hi - lo);
  sigma2_segment_into(lo, hi, out);
  return out;
}

bool is_squarefree(const Int& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("is_squarefree: n must be >= 1");
  const auto f = factorize(n);
  return std::all_of(f.factors.begin(), f.factors.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

bool is_even_perfect(const Int& n) {
  if (sgn(n) <= 0) throw std::invalid_argument("is_even_perfect: n must be >= 1");
  if (mpz_even_p(n.get_mpz_t()) == 0) return false;
  const unsigned long twos = mpz_scan1(n.get_mpz_t(), 0);
  Int odd;
  mpz_fdiv_q_2exp(odd.get_mpz_t(), n.get_mpz_t(), twos);
  Int mersenne;
  mpz_ui_pow_ui(mersenne.get_mpz_t(), 2, twos + 1);
  mersenne -= 1;
  return odd == mersenne && is_prime(mersenne);
}

}  // namespace sigmalucas::arith
