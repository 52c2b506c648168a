#pragma once

#include <cstddef>
#include <vector>

#include "sigmalucas/integer.hpp"

// Lucas sequences U_k(P,Q), V_k(P,Q) and the order-2 recurrence identities
// the solution families are built on.
namespace sigmalucas::lucas {

struct LucasParams {
  Int P;
  Int Q;
};

/// A_0, A_1 and the recurrence A_n = u A_{n-1} + v A_{n-2}.
struct RecurrenceSeed {
  Int A0;
  Int A1;
  Int u;
  Int v;
};

struct LucasPair {
  Int U;
  Int V;
};

/// Both sides of an identity instance; equality is the contract.
struct IdentitySides {
  Int lhs;
  Int rhs;

  bool holds() const { return lhs == rhs; }
};

/// U_k and V_k by fast doubling. Negative k requires |Q| = 1 and uses
/// U_{-k} = -Q^k U_k, V_{-k} = Q^k V_k; otherwise throws std::domain_error.
LucasPair lucas_uv(const LucasParams& params, long k);

inline Int lucas_u(const LucasParams& params, long k) { return lucas_uv(params, k).U; }
inline Int lucas_v(const LucasParams& params, long k) { return lucas_uv(params, k).V; }

/// sum_{i=0}^{floor(k/2)} C(k-i, i) u^(k-2i) v^i. Throws for k < 0.
Int s_poly(long k, const Int& u, const Int& v);

/// A_0 .. A_{count-1}.
std::vector<Int> recurrence_terms(const RecurrenceSeed& seed, std::size_t count);

/// A_{n+r} A_{n-r} - A_n^2  vs  (-v)^(n-r) s(r-1,u,v)^2 (v A0^2 + u A0 A1 - A1^2).
/// Requires 1 <= r <= n.
IdentitySides check_catalan(const RecurrenceSeed& seed, long n, long r);

enum class ParityVariant {
  even_v1,   // v = 1, terms A_{2n}, A_{2n+2}
  odd_v1,    // v = 1, terms A_{2n-1}, A_{2n+1}
  v_minus1,  // v = -1, terms A_{n-1}, A_{n+1}
};

/// 1 + X^2 + Y^2 against the r = 1 specialization of the Catalan-type identity.
/// Throws std::invalid_argument on a wrong v or a negative index.
IdentitySides check_parity_identity(ParityVariant variant, const RecurrenceSeed& seed, long n);

/// Relation ids 1..6:
///   1: V_k = U_{k+1} - Q U_{k-1}
///   2: (P^2-4Q) U_k = V_{k+1} - Q V_{k-1}
///   3: 2 U_{k+l} = U_k V_l + U_l V_k
///   4: 2 Q^l U_{k-l} = U_k V_l - U_l V_k
///   5: 2 V_{k+l} = (P^2-4Q) U_k U_l + V_k V_l
///   6: 2 Q^l V_{k-l} = V_k V_l - (P^2-4Q) U_k U_l
/// `l` is ignored by relations 1 and 2.
IdentitySides check_lucas_relation(int relation, const LucasParams& params, long k, long l = 0);

}  // namespace sigmalucas::lucas
