#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace k3lm {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const BigInt& v) { return v.get_str(); }

/// Floor of a/b for b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Ceiling of a/b for b != 0.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Largest integer s with s*s <= v; v must be non-negative.
inline BigInt isqrt(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

/// Floor of a non-negative rational.
inline BigInt floor_rational(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

inline std::optional<std::int64_t> to_int64(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) return std::nullopt;
  return static_cast<std::int64_t>(v.get_si());
}

inline BigInt big(long v) { return BigInt(v); }

}  // namespace k3lm
