#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "rectpoint/rng.hpp"

namespace rectpoint {

// Exact rational scalar. GMP's mpq_class maintains the canonical form we
// rely on: positive denominator, gcd(|num|, den) = 1, zero stored as 0/1.
using BigRat = mpq_class;

inline BigRat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_zero(const BigRat& r) { return sgn(r) == 0; }

inline std::string rat_to_string(const BigRat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p" or "p/q" with optional sign.
inline BigRat rat_parse(const std::string& text) {
  mpq_class r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  if (r.get_den() == 0) {
    throw std::invalid_argument("rational with zero denominator: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

inline double rat_to_double(const BigRat& r) { return r.get_d(); }

// gcd on nonnegative rationals: gcd of numerators over lcm of denominators.
inline BigRat rat_gcd(const BigRat& x, const BigRat& y) {
  BigRat r(gcd(x.get_num(), y.get_num()), lcm(x.get_den(), y.get_den()));
  r.canonicalize();
  return r;
}

inline BigRat rat_pow(const BigRat& base, unsigned exp) {
  BigRat acc(1), b = base;
  while (exp) {
    if (exp & 1) acc *= b;
    if (exp >>= 1) b *= b;
  }
  return acc;
}

// The sampling distribution used throughout: numerator uniform in [-20, 20],
// denominator uniform in [1, 10], from the counter-based generator.
inline BigRat draw_rational(std::uint64_t seed, std::uint64_t index,
                            std::uint64_t trial, std::uint64_t slot) {
  const long num = rng::draw_in(seed, index, trial, 2 * slot, -20, 20);
  const long den = rng::draw_in(seed, index, trial, 2 * slot + 1, 1, 10);
  return rat(num, den);
}

}  // namespace rectpoint
