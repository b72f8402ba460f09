#pragma once

#include <string>
#include <utility>

#include "rectpoint/multipoly.hpp"

namespace rectpoint {

// Rational function num/den over MultiPoly. Equality is cross-multiplied
// (num*g.den - g.num*den == 0); no multivariate gcd reduction is performed.
// Coefficient growth is kept in check by dividing num and den by the common
// part of their integer contents after every operation, which preserves the
// value exactly. The denominator's leading coefficient is kept positive so
// serialization is deterministic.
class RatFun {
public:
  explicit RatFun(MultiPoly num)
      : num_(std::move(num)), den_(MultiPoly::constant(num_.arity(), BigRat(1))) {}

  RatFun(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (num_.arity() != den_.arity()) {
      throw std::invalid_argument("rational function arity mismatch");
    }
    if (den_.is_zero()) throw construction_error("zero denominator");
    normalize();
  }

  static RatFun constant(unsigned arity, BigRat value) {
    return RatFun(MultiPoly::constant(arity, std::move(value)));
  }

  static RatFun variable(unsigned arity, unsigned var) {
    return RatFun(MultiPoly::variable(arity, var));
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  unsigned arity() const { return num_.arity(); }
  bool is_zero() const { return num_.is_zero(); }

  bool operator==(const RatFun& other) const {
    if (arity() != other.arity()) {
      throw std::invalid_argument("rational function arity mismatch");
    }
    return (num_ * other.den_ - other.num_ * den_).is_zero();
  }
  bool operator!=(const RatFun& other) const { return !(*this == other); }

  RatFun operator-() const {
    RatFun r = *this;
    r.num_.negate_in_place();
    return r;
  }

  friend RatFun operator+(const RatFun& f, const RatFun& g) { return combined(f, g, false); }
  friend RatFun operator-(const RatFun& f, const RatFun& g) { return combined(f, g, true); }

  friend RatFun operator*(const RatFun& f, const RatFun& g) {
    return RatFun(f.num_ * g.num_, f.den_ * g.den_);
  }

  friend RatFun operator/(const RatFun& f, const RatFun& g) {
    if (g.num_.is_zero()) throw construction_error("division by zero");
    return RatFun(f.num_ * g.den_, f.den_ * g.num_);
  }

  RatFun& operator+=(const RatFun& g) { return *this = *this + g; }
  RatFun& operator-=(const RatFun& g) { return *this = *this - g; }
  RatFun& operator*=(const RatFun& g) { return *this = *this * g; }
  RatFun& operator/=(const RatFun& g) { return *this = *this / g; }

  // Exact value at a point. Throws construction_error when the denominator
  // vanishes there.
  BigRat eval(std::span<const BigRat> point) const {
    BigRat d = den_.eval(point);
    if (rat_is_zero(d)) throw construction_error("denominator vanishes at sample");
    return num_.eval(point) / d;
  }

  std::string to_string() const { return to_string(MultiPoly::default_names(arity())); }

  std::string to_string(const std::vector<std::string>& names) const {
    if (den_.term_count() == 1 && den_.degree() == 0 && den_.leading_coefficient() == 1) {
      return num_.to_string(names);
    }
    return "(" + num_.to_string(names) + ") / (" + den_.to_string(names) + ")";
  }

  // "num" or "num / den" with both sides in the relaxed input syntax.
  static RatFun parse(const std::string& text, unsigned arity) {
    auto slash = text.find('/');
    // a '/' inside a coefficient like "1/2" is always preceded by a digit;
    // the fraction bar between polynomials is written " / "
    auto bar = text.find(" / ");
    if (bar == std::string::npos) {
      (void)slash;
      return RatFun(MultiPoly::parse(text, arity));
    }
    return RatFun(MultiPoly::parse(text.substr(0, bar), arity),
                  MultiPoly::parse(text.substr(bar + 3), arity));
  }

private:
  static RatFun combined(const RatFun& f, const RatFun& g, bool negate) {
    if (f.arity() != g.arity()) {
      throw std::invalid_argument("rational function arity mismatch");
    }
    if (f.den_ == g.den_) {
      return RatFun(negate ? f.num_ - g.num_ : f.num_ + g.num_, f.den_);
    }
    MultiPoly n = negate ? f.num_ * g.den_ - g.num_ * f.den_
                         : f.num_ * g.den_ + g.num_ * f.den_;
    return RatFun(std::move(n), f.den_ * g.den_);
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly::constant(num_.arity(), BigRat(1));
      return;
    }
    const BigRat cn = num_.content();
    const BigRat cd = den_.content();
    // rational gcd: gcd of numerators over lcm of denominators
    mpz_class g = gcd(cn.get_num(), cd.get_num());
    mpz_class l = lcm(cn.get_den(), cd.get_den());
    BigRat k(g, l);
    k.canonicalize();
    if (k != 1) {
      num_.divide_by(k);
      den_.divide_by(k);
    }
    if (sgn(den_.leading_coefficient()) < 0) {
      num_.negate_in_place();
      den_.negate_in_place();
    }
  }

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace rectpoint
