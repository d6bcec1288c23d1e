#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hdlab::arith {

using BigInt = mpz_class;

/// p^e for a machine-sized exponent.
inline BigInt pow_ui(std::uint64_t p, std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

/// Largest v with p^v | x.  Requires x != 0.
inline std::uint64_t vp_nonzero(const BigInt& x, std::uint64_t p) {
  BigInt pp = p;
  BigInt q = x;
  return mpz_remove(q.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
}

/// Strips all factors of p from x in place and returns how many were removed.
inline std::uint64_t strip_p(BigInt& x, std::uint64_t p) {
  if (x == 0) return 0;
  BigInt pp = p;
  return mpz_remove(x.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
}

/// Converts to uint64_t, throwing when the value does not fit.
std::uint64_t to_u64(const BigInt& x);

inline std::string to_string(const BigInt& x) { return x.get_str(); }

}  // namespace hdlab::arith
