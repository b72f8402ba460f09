#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rectpoint/bigrat.hpp"
#include "rectpoint/errors.hpp"

namespace rectpoint {

// Cap on term-map sizes for symbolic runs. Drivers that hit it report
// "inconclusive", never a wrong answer.
inline std::size_t& poly_term_budget() {
  static std::size_t budget = 2'000'000;
  return budget;
}

// Monomials are packed into one word: total degree in the top 16 bits,
// then one byte per variable (earlier variables in higher bytes). Plain
// integer comparison is then graded-lex order with leading term greatest.
namespace mono {

inline constexpr unsigned kMaxArity = 6;
inline constexpr unsigned kMaxExponent = 255;

inline std::uint64_t pack1(unsigned var, unsigned exp) {
  return (static_cast<std::uint64_t>(exp) << 48) |
         (static_cast<std::uint64_t>(exp) << (40 - 8 * var));
}

inline unsigned exponent(std::uint64_t m, unsigned var) {
  return static_cast<unsigned>((m >> (40 - 8 * var)) & 0xff);
}

inline unsigned total_degree(std::uint64_t m) {
  return static_cast<unsigned>(m >> 48);
}

inline std::uint64_t mul(std::uint64_t m1, std::uint64_t m2, unsigned arity) {
  for (unsigned i = 0; i < arity; ++i) {
    if (exponent(m1, i) + exponent(m2, i) > kMaxExponent) {
      throw budget_exceeded("monomial exponent overflow (> 255)");
    }
  }
  return m1 + m2;  // bytewise add, carry-free by the check above
}

}  // namespace mono

// Sparse multivariate polynomial over exact rationals, in canonical form:
// no zero coefficients, terms sorted leading-first. Two polynomials are
// equal iff their term lists are equal.
class MultiPoly {
public:
  using Term = std::pair<std::uint64_t, BigRat>;

  explicit MultiPoly(unsigned arity) : arity_(check_arity(arity)) {}

  static MultiPoly zero(unsigned arity) { return MultiPoly(arity); }

  static MultiPoly constant(unsigned arity, BigRat value) {
    MultiPoly p(arity);
    if (!rat_is_zero(value)) p.terms_.emplace_back(0, std::move(value));
    return p;
  }

  static MultiPoly variable(unsigned arity, unsigned var) {
    if (var >= arity) throw std::invalid_argument("variable index out of range");
    MultiPoly p(arity);
    p.terms_.emplace_back(mono::pack1(var, 1), BigRat(1));
    return p;
  }

  unsigned arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  unsigned degree() const {
    return terms_.empty() ? 0 : mono::total_degree(terms_.front().first);
  }

  const BigRat& leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading coefficient of zero");
    return terms_.front().second;
  }

  // Coefficient of a monomial given as exponents-per-variable.
  BigRat coefficient(std::span<const unsigned> exps) const {
    if (exps.size() != arity_) throw std::invalid_argument("exponent arity mismatch");
    std::uint64_t key = 0;
    for (unsigned i = 0; i < arity_; ++i) key += mono::pack1(i, exps[i]);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                               [](const Term& t, std::uint64_t k) { return t.first > k; });
    if (it != terms_.end() && it->first == key) return it->second;
    return BigRat(0);
  }

  bool operator==(const MultiPoly& other) const {
    return arity_ == other.arity_ && terms_ == other.terms_;
  }
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  MultiPoly operator-() const {
    MultiPoly r(arity_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, -c);
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    return merge(p, q, /*negate_q=*/false);
  }

  friend MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
    return merge(p, q, /*negate_q=*/true);
  }

  friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    require_same_arity(p, q);
    MultiPoly r(p.arity_);
    if (p.terms_.empty() || q.terms_.empty()) return r;

    std::unordered_map<std::uint64_t, BigRat> acc;
    acc.reserve(std::min<std::size_t>(p.terms_.size() * q.terms_.size(), 1u << 20));
    for (const auto& [m1, c1] : p.terms_) {
      for (const auto& [m2, c2] : q.terms_) {
        acc[mono::mul(m1, m2, p.arity_)] += c1 * c2;
      }
      if (acc.size() > poly_term_budget()) {
        throw budget_exceeded(acc.size(), poly_term_budget());
      }
    }
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!rat_is_zero(c)) r.terms_.emplace_back(m, std::move(c));
    }
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& a, const Term& b) { return a.first > b.first; });
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& q) { return *this = *this + q; }
  MultiPoly& operator-=(const MultiPoly& q) { return *this = *this - q; }
  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

  friend MultiPoly operator*(const MultiPoly& p, const BigRat& k) {
    MultiPoly r(p.arity_);
    if (rat_is_zero(k)) return r;
    r.terms_.reserve(p.terms_.size());
    for (const auto& [m, c] : p.terms_) r.terms_.emplace_back(m, c * k);
    return r;
  }
  friend MultiPoly operator*(const BigRat& k, const MultiPoly& p) { return p * k; }

  // Exact value at a point; point length must equal the arity.
  BigRat eval(std::span<const BigRat> point) const {
    if (point.size() != arity_) {
      throw std::invalid_argument("evaluation point arity mismatch");
    }
    // power tables per variable up to the max exponent present
    std::vector<std::vector<BigRat>> powers(arity_);
    for (unsigned v = 0; v < arity_; ++v) {
      unsigned max_e = 0;
      for (const auto& [m, c] : terms_) max_e = std::max(max_e, mono::exponent(m, v));
      powers[v].reserve(max_e + 1);
      powers[v].push_back(BigRat(1));
      for (unsigned e = 1; e <= max_e; ++e) powers[v].push_back(powers[v].back() * point[v]);
    }
    BigRat sum(0);
    for (const auto& [m, c] : terms_) {
      BigRat t = c;
      for (unsigned v = 0; v < arity_; ++v) {
        unsigned e = mono::exponent(m, v);
        if (e) t *= powers[v][e];
      }
      sum += t;
    }
    return sum;
  }

  BigRat eval(const std::vector<BigRat>& point) const {
    return eval(std::span<const BigRat>(point));
  }

  // Value in any commutative ring S supporting +, *, and construction of
  // constants from BigRat via `lift`. Substituting ring elements for the
  // variables makes transcribed formulas usable over every scalar field.
  template <class S, class Lift>
  S eval_in(std::span<const S> point, Lift&& lift) const {
    if (point.size() != arity_) {
      throw std::invalid_argument("evaluation point arity mismatch");
    }
    S sum = lift(BigRat(0));
    for (const auto& [m, c] : terms_) {
      S t = lift(c);
      for (unsigned v = 0; v < arity_; ++v) {
        for (unsigned e = mono::exponent(m, v); e > 0; --e) t = t * point[v];
      }
      sum = sum + t;
    }
    return sum;
  }

  // gcd of coefficient numerators over lcm of denominators; positive, 0 for
  // the zero polynomial. Dividing by it leaves integer coefficients with
  // gcd 1.
  BigRat content() const {
    if (terms_.empty()) return BigRat(0);
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
      g = gcd(g, c.get_num());
      l = lcm(l, c.get_den());
    }
    BigRat r(g, l);
    r.canonicalize();
    return r;
  }

  void divide_by(const BigRat& k) {
    if (rat_is_zero(k)) throw std::invalid_argument("division by zero scalar");
    for (auto& [m, c] : terms_) c /= k;
  }

  void negate_in_place() {
    for (auto& [m, c] : terms_) c = -c;
  }

  // --- deterministic text form ----------------------------------------
  // Strict output: explicit coefficients and exponents, leading term first,
  // e.g. "-1*a^1*c^1 + 1*b^2". parse() accepts a relaxed superset
  // ("a^2*c - a*b*d", "2*b", "-b - d").

  std::string to_string() const { return to_string(default_names(arity_)); }

  std::string to_string(const std::vector<std::string>& names) const {
    if (names.size() != arity_) throw std::invalid_argument("name list arity mismatch");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (first) {
        out += rat_to_string(c);
      } else if (sgn(c) < 0) {
        out += " - " + rat_to_string(BigRat(-c));
      } else {
        out += " + " + rat_to_string(c);
      }
      first = false;
      for (unsigned v = 0; v < arity_; ++v) {
        unsigned e = mono::exponent(m, v);
        if (e) out += "*" + names[v] + "^" + std::to_string(e);
      }
    }
    return out;
  }

  static MultiPoly parse(const std::string& text, unsigned arity) {
    return parse(text, arity, default_names(arity));
  }

  static MultiPoly parse(const std::string& text, unsigned arity,
                         const std::vector<std::string>& names);

  static std::vector<std::string> default_names(unsigned arity) {
    if (arity == 4) return {"a", "b", "c", "d"};
    if (arity == 6) return {"a1", "b1", "c1", "d1", "a2", "b2"};
    std::vector<std::string> names;
    for (unsigned i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i));
    return names;
  }

private:
  static unsigned check_arity(unsigned arity) {
    if (arity < 1 || arity > mono::kMaxArity) {
      throw std::invalid_argument("arity must be in [1, 6]");
    }
    return arity;
  }

  static void require_same_arity(const MultiPoly& p, const MultiPoly& q) {
    if (p.arity_ != q.arity_) throw std::invalid_argument("polynomial arity mismatch");
  }

  static MultiPoly merge(const MultiPoly& p, const MultiPoly& q, bool negate_q) {
    require_same_arity(p, q);
    MultiPoly r(p.arity_);
    r.terms_.reserve(p.terms_.size() + q.terms_.size());
    auto pi = p.terms_.begin(), qi = q.terms_.begin();
    while (pi != p.terms_.end() || qi != q.terms_.end()) {
      if (qi == q.terms_.end() || (pi != p.terms_.end() && pi->first > qi->first)) {
        r.terms_.push_back(*pi++);
      } else if (pi == p.terms_.end() || qi->first > pi->first) {
        r.terms_.emplace_back(qi->first, negate_q ? -qi->second : qi->second);
        ++qi;
      } else {
        BigRat c = pi->second;
        if (negate_q) c -= qi->second;
        else c += qi->second;
        if (!rat_is_zero(c)) r.terms_.emplace_back(pi->first, std::move(c));
        ++pi;
        ++qi;
      }
    }
    if (r.terms_.size() > poly_term_budget()) {
      throw budget_exceeded(r.terms_.size(), poly_term_budget());
    }
    return r;
  }

  unsigned arity_;
  std::vector<Term> terms_;
};

namespace detail {

// Minimal recursive-descent parser for the polynomial text form.
class PolyParser {
public:
  PolyParser(const std::string& text, unsigned arity,
             const std::vector<std::string>& names)
      : text_(text), arity_(arity), names_(names) {}

  MultiPoly run() {
    MultiPoly acc = MultiPoly::zero(arity_);
    skip_ws();
    bool negative = consume_sign();
    while (true) {
      acc = acc + term(negative);
      skip_ws();
      if (pos_ >= text_.size()) break;
      if (text_[pos_] == '+') negative = false;
      else if (text_[pos_] == '-') negative = true;
      else throw std::invalid_argument("unexpected character in polynomial: '" +
                                       std::string(1, text_[pos_]) + "'");
      ++pos_;
      skip_ws();
    }
    return acc;
  }

private:
  MultiPoly term(bool negative) {
    BigRat coeff(negative ? -1 : 1);
    MultiPoly monom = MultiPoly::constant(arity_, BigRat(1));
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        coeff *= number();
        any = true;
      } else if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
        auto [var, exp] = name_power();
        MultiPoly v = MultiPoly::variable(arity_, var);
        for (unsigned e = 0; e < exp; ++e) monom = monom * v;
        any = true;
      } else {
        break;
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) throw std::invalid_argument("empty term in polynomial text");
    return monom * coeff;
  }

  BigRat number() {
    std::string digits = integer_digits();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::string den = integer_digits();
      return rat_parse(digits + "/" + den);
    }
    return rat_parse(digits);
  }

  std::string integer_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) throw std::invalid_argument("expected digits in polynomial text");
    return text_.substr(start, pos_ - start);
  }

  std::pair<unsigned, unsigned> name_power() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name = text_.substr(start, pos_ - start);
    unsigned var = arity_;
    for (unsigned i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) { var = i; break; }
    }
    if (var == arity_) throw std::invalid_argument("unknown variable '" + name + "'");
    unsigned exp = 1;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      exp = static_cast<unsigned>(std::stoul(integer_digits()));
      if (exp > mono::kMaxExponent) throw std::invalid_argument("exponent too large");
    }
    return {var, exp};
  }

  bool consume_sign() {
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      bool neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  const std::string& text_;
  unsigned arity_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly MultiPoly::parse(const std::string& text, unsigned arity,
                                  const std::vector<std::string>& names) {
  if (names.size() != arity) throw std::invalid_argument("name list arity mismatch");
  return detail::PolyParser(text, arity, names).run();
}

// Probabilistic zero test: evaluates at seeded random integer points
// (numerators in [-10^6, 10^6], denominator 1). Returns false as soon as a
// nonzero value is seen; true means "plausibly zero" and callers must
// confirm with is_zero() before claiming a proof.
inline bool schwartz_zippel_check(const MultiPoly& p, std::size_t trials,
                                  std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("schwartz_zippel_check needs trials >= 1");
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<BigRat> point;
    point.reserve(p.arity());
    for (unsigned v = 0; v < p.arity(); ++v) {
      point.emplace_back(rat(rng::draw_in(seed, t, 0, v, -1'000'000, 1'000'000)));
    }
    if (!rat_is_zero(p.eval(point))) return false;
  }
  return true;
}

}  // namespace rectpoint
