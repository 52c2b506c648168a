#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace sigmalucas {

static_assert(sizeof(unsigned long) == 8, "LP64 platform expected");

/// Exact integer used across the library.
using Int = mpz_class;

using u128 = unsigned __int128;
using i128 = __int128;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline Int from_u64(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }
inline Int from_i64(std::int64_t v) { return Int(static_cast<long>(v)); }

inline bool fits_u64(const Int& v) { return sgn(v) >= 0 && mpz_fits_ulong_p(v.get_mpz_t()); }
inline bool fits_i64(const Int& v) { return mpz_fits_slong_p(v.get_mpz_t()); }

inline std::uint64_t to_u64(const Int& v) { return mpz_get_ui(v.get_mpz_t()); }
inline std::int64_t to_i64(const Int& v) { return mpz_get_si(v.get_mpz_t()); }

inline Int isqrt(const Int& v) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

inline bool is_square(const Int& v) { return mpz_perfect_square_p(v.get_mpz_t()) != 0; }

inline Int ipow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace sigmalucas
