#include <catch2/catch_amalgamated.hpp>

#include "rectpoint/ratfun.hpp"
#include "test_support.hpp"

using rectpoint::BigRat;
using rectpoint::MultiPoly;
using rectpoint::rat;
using rectpoint::RatFun;

namespace {

RatFun rv(unsigned i) { return RatFun::variable(4, i); }

RatFun random_ratfun(std::uint64_t seed, std::uint64_t index) {
  MultiPoly num = test_support::random_poly(seed, 2 * index, 4, 2, 3);
  MultiPoly den = test_support::random_poly(seed, 2 * index + 1, 4, 2, 3);
  if (den.is_zero()) den = MultiPoly::constant(4, rat(1));
  return RatFun(num, den);
}

}  // namespace

TEST_CASE("reciprocal product is one") {
  RatFun a = rv(0), b = rv(1);
  RatFun one = RatFun::constant(4, rat(1));
  CHECK((a / b) * (b / a) == one);
  CHECK_FALSE(one / a == one / b);
}

TEST_CASE("equality ignores common polynomial factors") {
  RatFun a = rv(0), b = rv(1);
  RatFun lhs = RatFun((a.num() * a.num()) - (b.num() * b.num()), a.num() - b.num());
  CHECK(lhs == a + b);
}

TEST_CASE("pipeline value matches eq17 transcription") {
  // Q_y = (2abc + 2acd)/(3ac - bd)
  RatFun q_y = RatFun(MultiPoly::parse("2*a*b*c + 2*a*c*d", 4),
                      MultiPoly::parse("3*a*c - b*d", 4));
  RatFun two = RatFun::constant(4, rat(2));
  RatFun three = RatFun::constant(4, rat(3));
  RatFun a = rv(0), b = rv(1), c = rv(2), d = rv(3);
  CHECK(two * a * c * (b + d) / (three * a * c - b * d) == q_y);
}

TEST_CASE("division by the zero rational function") {
  RatFun zero = RatFun::constant(4, rat(0));
  CHECK_THROWS_AS(rv(0) / zero, rectpoint::construction_error);
  CHECK_THROWS_AS(RatFun(MultiPoly::variable(4, 0), MultiPoly::zero(4)),
                  rectpoint::construction_error);
}

TEST_CASE("equality is reflexive, symmetric and transitive") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    RatFun f = random_ratfun(31, 3 * i);
    RatFun g = random_ratfun(31, 3 * i + 1);
    CHECK(f == f);
    CHECK((f == g) == (g == f));
    // two different representations of f via nonzero polynomial scalings
    MultiPoly m1 = test_support::random_poly(33, 2 * i, 4, 2, 2);
    MultiPoly m2 = test_support::random_poly(33, 2 * i + 1, 4, 2, 2);
    if (m1.is_zero() || m2.is_zero()) continue;
    RatFun h = RatFun(f.num() * m1, f.den() * m1);
    RatFun k = RatFun(f.num() * m2, f.den() * m2);
    REQUIRE(f == h);
    REQUIRE(h == k);
    CHECK(f == k);
  }
}

TEST_CASE("field identities on random values") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    RatFun f = random_ratfun(32, 3 * i);
    RatFun g = random_ratfun(32, 3 * i + 1);
    RatFun h = random_ratfun(32, 3 * i + 2);
    CHECK((f - f).is_zero());
    CHECK(f * (g + h) == f * g + f * h);
    if (!g.is_zero()) CHECK((f / g) * g == f);
  }
}

TEST_CASE("normalization keeps values exact") {
  // num and den share a content factor of 6; value must be unchanged
  RatFun f = RatFun(MultiPoly::parse("6*a + 12*b", 4), MultiPoly::parse("18*c", 4));
  CHECK(f == RatFun(MultiPoly::parse("a + 2*b", 4), MultiPoly::parse("3*c", 4)));
  CHECK(f.den().leading_coefficient() > 0);
  std::vector<BigRat> pt{rat(1), rat(2), rat(3), rat(5)};
  CHECK(f.eval(pt) == rat(5, 9));
}

TEST_CASE("denominator sign is normalized") {
  RatFun f = RatFun(MultiPoly::parse("a", 4), MultiPoly::parse("-b", 4));
  CHECK(f.den().leading_coefficient() > 0);
  std::vector<BigRat> pt{rat(3), rat(2), rat(1), rat(1)};
  CHECK(f.eval(pt) == rat(-3, 2));
}

TEST_CASE("evaluation refuses vanishing denominators") {
  RatFun f = RatFun(MultiPoly::parse("a", 4), MultiPoly::parse("b - c", 4));
  std::vector<BigRat> pt{rat(1), rat(2), rat(2), rat(1)};
  CHECK_THROWS_AS(f.eval(pt), rectpoint::construction_error);
}
