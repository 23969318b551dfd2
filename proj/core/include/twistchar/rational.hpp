#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace twistchar {

/**
 * @brief Exact rational arithmetic type used throughout the library.
 *
 * All gradings in the twisted-module constructions live in small fractional
 * lattices (denominators dividing 4k), so every exponent, inner product and
 * quadratic-form value is kept as an exact rational.  GMP's mpq_class is
 * always stored in canonical form (reduced, positive denominator).
 */
using Rational = mpq_class;

/** @brief Construct num/den as an exact rational. Throws on den == 0. */
inline Rational rat(long num, long den = 1) {
  if (den == 0) throw std::domain_error("rat: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/** @brief Exact conversion from long long (GMP's C++ wrappers predate long long). */
inline Rational rat_ll(long long v) {
  return Rational(mpz_class(std::to_string(v)));
}

/** @brief True when the rational has denominator 1. */
inline bool is_integer(const Rational& r) {
  return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0;
}

/** @brief Exact conversion to long; throws when not an integer or out of range. */
inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("to_long: not an integer");
  if (!r.get_num().fits_slong_p()) throw std::overflow_error("to_long: out of range");
  return r.get_num().get_si();
}

/** @brief Largest integer <= r. */
inline mpz_class floor_int(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

/** @brief Smallest integer >= r. */
inline mpz_class ceil_int(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return q;
}

/** @brief Largest integer <= r as long; throws if out of range. */
inline long floor_long(const Rational& r) {
  mpz_class q = floor_int(r);
  if (!q.fits_slong_p()) throw std::overflow_error("floor_long: out of range");
  return q.get_si();
}

/** @brief Smallest integer >= r as long; throws if out of range. */
inline long ceil_long(const Rational& r) {
  mpz_class q = ceil_int(r);
  if (!q.fits_slong_p()) throw std::overflow_error("ceil_long: out of range");
  return q.get_si();
}

/**
 * @brief Render as "num/den" with the denominator always present
 *        (e.g. "6/1", "-3/4").  Used by the machine-readable formats.
 */
inline std::string rational_str(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/**
 * @brief Parse "num/den" or a bare integer "num" into a rational.
 *
 * Accepts an optional leading '-' on the numerator.  Throws
 * std::invalid_argument on malformed input or zero denominator.
 */
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num = s, den = "1";
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!digits_ok(num, true) || !digits_ok(den, false))
    throw std::invalid_argument("parse_rational: malformed rational '" + s + "'");
  mpz_class num_z(num), den_z(den);
  if (den_z == 0) throw std::invalid_argument("parse_rational: zero denominator");
  Rational r(num_z, den_z);
  r.canonicalize();
  return r;
}

/** @brief Exact dot product of an integer vector with a rational vector. */
inline Rational dot(const std::vector<long>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::domain_error("dot: size mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += Rational(a[i]) * b[i];
  return acc;
}

}  // namespace twistchar
