#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <type_traits>

#include "rectpoint/bigrat.hpp"
#include "rectpoint/ratfun.hpp"

namespace rectpoint {

// Relative tolerance for float-mode predicates. Float mode never feeds
// proofs; it exists for cross-checks and figure output.
inline constexpr double kFloatTol = 1e-9;

inline std::string double_to_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Uniform view of the three scalar fields the kernel is instantiated with:
// BigRat (exact), RatFun (symbolic, exact as polynomial identities) and
// double (approximate). `constant` takes a model value so RatFun can learn
// the arity from context.
template <class S>
struct scalar_traits;

template <>
struct scalar_traits<BigRat> {
  static constexpr bool exact = true;
  static BigRat constant(const BigRat&, long k) { return BigRat(k); }
  static BigRat from_rat(const BigRat&, const BigRat& c) { return c; }
  static bool is_zero(const BigRat& v) { return rat_is_zero(v); }
  static std::string serialize(const BigRat& v) { return rat_to_string(v); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double constant(double, long k) { return static_cast<double>(k); }
  static double from_rat(double, const BigRat& c) { return rat_to_double(c); }
  static bool is_zero(double v) { return v == 0.0; }
  static std::string serialize(double v) { return double_to_string(v); }
};

template <>
struct scalar_traits<RatFun> {
  static constexpr bool exact = true;
  static RatFun constant(const RatFun& model, long k) {
    return RatFun::constant(model.arity(), BigRat(k));
  }
  static RatFun from_rat(const RatFun& model, const BigRat& c) {
    return RatFun::constant(model.arity(), c);
  }
  static bool is_zero(const RatFun& v) { return v.is_zero(); }
  static std::string serialize(const RatFun& v) { return v.to_string(); }
};

template <class S>
inline constexpr bool is_float_scalar_v = std::is_same_v<S, double>;

// A predicate residual: exactly zero iff the predicate holds (exact fields);
// in float mode |value| is compared against kFloatTol * scale, where scale
// collects the magnitudes of the residual's constituent terms.
template <class S>
struct Residual {
  S value;
  double scale = 1.0;
};

template <class S>
bool residual_zero(const Residual<S>& r) {
  if constexpr (is_float_scalar_v<S>) {
    return std::abs(r.value) <= kFloatTol * std::max(1.0, r.scale);
  } else {
    return scalar_traits<S>::is_zero(r.value);
  }
}

// Degeneracy guard for divisions inside constructions: exact zero for exact
// fields, tolerance-scaled for float.
template <class S>
bool effectively_zero(const S& v, double scale) {
  if constexpr (is_float_scalar_v<S>) {
    return std::abs(v) <= kFloatTol * std::max(1.0, scale);
  } else {
    (void)scale;
    return scalar_traits<S>::is_zero(v);
  }
}

}  // namespace rectpoint
