#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "hpi/errors.hpp"

namespace hpi {

// Exact scalars. mpq_class keeps values canonical (reduced, positive
// denominator) as long as they are produced through arithmetic; explicit
// constructors from raw fractions must canonicalize.
using Int = mpz_class;
using Rat = mpq_class;
using Vec = std::vector<Rat>;

inline Rat rat_of(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "-p", "p/q" with arbitrary-precision parts.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational literal");
  try {
    Rat r(s);
    if (r.get_den() == 0) throw Error(ErrorCode::ParseError, "zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad rational literal: " + s);
  }
}

// Canonical text form "p" or "p/q", q > 0, gcd(p, q) = 1.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

inline bool vec_is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

inline Vec vec_zero(std::size_t n) { return Vec(n, Rat(0)); }

inline void vec_axpy(Vec& y, const Rat& c, const Vec& x) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += c * x[i];
}

inline Vec vec_scaled(const Vec& v, const Rat& c) {
  Vec out(v);
  for (Rat& x : out) x *= c;
  return out;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

// Residue of r modulo prime p, denominator inverted mod p.
// Requires gcd(den, p) = 1; caller screens primes first.
inline std::uint64_t rat_mod(const Rat& r, std::uint64_t p) {
  mpz_class m(p);
  mpz_class num = r.get_num() % m;
  if (num < 0) num += m;
  mpz_class den = r.get_den() % m;
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    throw Error(ErrorCode::InternalCheck, "denominator not invertible mod prime");
  mpz_class res = (num * inv) % m;
  return static_cast<std::uint64_t>(res.get_ui());
}

inline bool den_divisible(const Rat& r, std::uint64_t p) {
  return mpz_divisible_ui_p(r.get_den().get_mpz_t(), static_cast<unsigned long>(p)) != 0;
}

}  // namespace hpi
