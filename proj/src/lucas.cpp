#include "sigmalucas/lucas.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace sigmalucas::lucas {

namespace {

bool unit(const Int& q) { return q == 1 || q == -1; }

// Q^e for e >= 0, or for e < 0 when |Q| = 1.
Int power_of_q(const Int& q, long e) {
  if (e < 0) {
    if (!unit(q)) throw std::domain_error("Q^" + std::to_string(e) + " is not integral for Q=" + to_string(q));
    e = -e;
  }
  return ipow(q, static_cast<unsigned long>(e));
}

void half(Int& v) { mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), 2); }

}  // namespace

LucasPair lucas_uv(const LucasParams& params, long k) {
  const Int& P = params.P;
  const Int& Q = params.Q;
  if (k < 0) {
    if (!unit(Q)) {
      throw std::domain_error("negative index " + std::to_string(k) + " needs |Q| = 1, got Q=" + to_string(Q));
    }
    LucasPair pos = lucas_uv(params, -k);
    const Int qk = power_of_q(Q, -k);
    return {-qk * pos.U, qk * pos.V};
  }

  const Int D = P * P - 4 * Q;
  Int U = 0, V = 2, Qj = 1;
  const auto bits = static_cast<unsigned long>(k);
  for (int bit = std::bit_width(bits) - 1; bit >= 0; --bit) {
    // j -> 2j
    U *= V;
    V = V * V - 2 * Qj;
    Qj *= Qj;
    if ((bits >> bit) & 1UL) {
      // j -> j+1; both numerators are even.
      Int nextU = P * U + V;
      Int nextV = D * U + P * V;
      half(nextU);
      half(nextV);
      U = std::move(nextU);
      V = std::move(nextV);
      Qj *= Q;
    }
  }
  return {U, V};
}

Int s_poly(long k, const Int& u, const Int& v) {
  if (k < 0) throw std::invalid_argument("s_poly: k must be >= 0");
  Int total = 0;
  Int binom;
  for (long i = 0; 2 * i <= k; ++i) {
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k - i), static_cast<unsigned long>(i));
    total += binom * ipow(u, static_cast<unsigned long>(k - 2 * i)) * ipow(v, static_cast<unsigned long>(i));
  }
  return total;
}

std::vector<Int> recurrence_terms(const RecurrenceSeed& seed, std::size_t count) {
  std::vector<Int> terms;
  terms.reserve(count);
  if (count > 0) terms.push_back(seed.A0);
  if (count > 1) terms.push_back(seed.A1);
  for (std::size_t i = 2; i < count; ++i) terms.push_back(seed.u * terms[i - 1] + seed.v * terms[i - 2]);
  return terms;
}

IdentitySides check_catalan(const RecurrenceSeed& seed, long n, long r) {
  if (r < 1 || r > n) {
    throw std::invalid_argument("check_catalan: need 1 <= r <= n, got n=" + std::to_string(n) +
                                ", r=" + std::to_string(r));
  }
  const auto A = recurrence_terms(seed, static_cast<std::size_t>(n + r + 1));
  const Int& a0 = seed.A0;
  const Int& a1 = seed.A1;
  const Int invariant = seed.v * a0 * a0 + seed.u * a0 * a1 - a1 * a1;
  const Int s = s_poly(r - 1, seed.u, seed.v);

  IdentitySides sides;
  sides.lhs = A[n + r] * A[n - r] - A[n] * A[n];
  sides.rhs = ipow(-seed.v, static_cast<unsigned long>(n - r)) * s * s * invariant;
  return sides;
}

IdentitySides check_parity_identity(ParityVariant variant, const RecurrenceSeed& seed, long n) {
  const Int& u = seed.u;
  const Int& a0 = seed.A0;
  const Int& a1 = seed.A1;
  const Int u2 = u * u;

  long lo = 0;
  long hi = 0;
  Int constant;
  Int coefficient;
  switch (variant) {
    case ParityVariant::even_v1:
      if (seed.v != 1) throw std::invalid_argument("even_v1 identity requires v = 1");
      lo = 2 * n;
      hi = 2 * n + 2;
      coefficient = u2 + 2;
      constant = -u2 * (a0 * a0 + u * a0 * a1 - a1 * a1);
      break;
    case ParityVariant::odd_v1:
      if (seed.v != 1) throw std::invalid_argument("odd_v1 identity requires v = 1");
      lo = 2 * n - 1;
      hi = 2 * n + 1;
      coefficient = u2 + 2;
      constant = u2 * (a0 * a0 + u * a0 * a1 - a1 * a1);
      break;
    case ParityVariant::v_minus1:
      if (seed.v != -1) throw std::invalid_argument("v_minus1 identity requires v = -1");
      lo = n - 1;
      hi = n + 1;
      coefficient = u2 - 2;
      constant = u2 * (a0 * a0 - u * a0 * a1 + a1 * a1);
      break;
  }
  if (lo < 0) throw std::invalid_argument("parity identity index below zero for n=" + std::to_string(n));

  const auto A = recurrence_terms(seed, static_cast<std::size_t>(hi + 1));
  const Int& x = A[lo];
  const Int& y = A[hi];
  return {1 + x * x + y * y, coefficient * x * y + constant + 1};
}

IdentitySides check_lucas_relation(int relation, const LucasParams& params, long k, long l) {
  const Int& Q = params.Q;
  const Int D = params.P * params.P - 4 * Q;
  const auto U = [&](long i) { return lucas_u(params, i); };
  const auto V = [&](long i) { return lucas_v(params, i); };

  switch (relation) {
    case 1:
      return {V(k), U(k + 1) - Q * U(k - 1)};
    case 2:
      return {D * U(k), V(k + 1) - Q * V(k - 1)};
    case 3:
      return {2 * U(k + l), U(k) * V(l) + U(l) * V(k)};
    case 4:
      return {2 * power_of_q(Q, l) * U(k - l), U(k) * V(l) - U(l) * V(k)};
    case 5:
      return {2 * V(k + l), D * U(k) * U(l) + V(k) * V(l)};
    case 6:
      return {2 * power_of_q(Q, l) * V(k - l), V(k) * V(l) - D * U(k) * U(l)};
    default:
      throw std::invalid_argument("relation id must be in 1..6, got " + std::to_string(relation));
  }
}

}  // namespace sigmalucas::lucas
