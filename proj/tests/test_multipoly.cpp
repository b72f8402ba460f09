#include <catch2/catch_amalgamated.hpp>

#include "rectpoint/multipoly.hpp"
#include "test_support.hpp"

using rectpoint::BigRat;
using rectpoint::MultiPoly;
using rectpoint::rat;

namespace {

MultiPoly var4(unsigned i) { return MultiPoly::variable(4, i); }

}  // namespace

TEST_CASE("difference of squares") {
  MultiPoly a = MultiPoly::variable(2, 0), b = MultiPoly::variable(2, 1);
  CHECK((a + b) * (a - b) == a * a - b * b);
}

TEST_CASE("additive inverse cancels") {
  MultiPoly a = var4(0), c = var4(2);
  MultiPoly s = a + c;
  CHECK((s + (-s)).is_zero());
}

TEST_CASE("eq17 denominator evaluates at the sample configuration") {
  // 3ac - bd at (1,2,3,5) = -1
  MultiPoly p = MultiPoly::constant(4, rat(3)) * var4(0) * var4(2) - var4(1) * var4(3);
  std::vector<BigRat> pt{rat(1), rat(2), rat(3), rat(5)};
  CHECK(p.eval(pt) == rat(-1));
}

TEST_CASE("eq19 slope numerator evaluates at the sample configuration") {
  // -(b+d) at (1,2,3,5) = -7
  MultiPoly p = -(var4(1) + var4(3));
  std::vector<BigRat> pt{rat(1), rat(2), rat(3), rat(5)};
  CHECK(p.eval(pt) == rat(-7));
}

TEST_CASE("evaluation basics") {
  MultiPoly a = MultiPoly::variable(2, 0), b = MultiPoly::variable(2, 1);
  std::vector<BigRat> pt{rat(3), rat(1)};
  CHECK((a * a - b * b).eval(pt) == rat(8));
  CHECK(MultiPoly::zero(2).eval(pt) == rat(0));
}

TEST_CASE("zero test") {
  MultiPoly p = test_support::random_poly(11, 0, 4);
  CHECK((p - p).is_zero());
  CHECK_FALSE(var4(0).is_zero());
}

TEST_CASE("arity mismatch is a usage error") {
  CHECK_THROWS_AS(MultiPoly::variable(2, 0) + MultiPoly::variable(3, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::variable(2, 0) * MultiPoly::variable(3, 0),
                  std::invalid_argument);
  std::vector<BigRat> pt{rat(1)};
  CHECK_THROWS_AS(MultiPoly::variable(2, 0).eval(pt), std::invalid_argument);
}

TEST_CASE("ring axioms on random operands") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    MultiPoly f = test_support::random_poly(21, 3 * i, 4);
    MultiPoly g = test_support::random_poly(21, 3 * i + 1, 4);
    MultiPoly h = test_support::random_poly(21, 3 * i + 2, 4);
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f * g) * h == f * (g * h));
    CHECK((f - f).is_zero());
    CHECK(f * g == g * f);
    CHECK(f + g == g + f);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  for (std::uint64_t i = 0; i < 200; ++i) {
    MultiPoly p = test_support::random_poly(22, 2 * i, 3);
    MultiPoly q = test_support::random_poly(22, 2 * i + 1, 3);
    auto pt = test_support::random_point(23, i, 3);
    CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
    CHECK((p - q).eval(pt) == p.eval(pt) - q.eval(pt));
    CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    CHECK((-p).eval(pt) == -p.eval(pt));
  }
}

TEST_CASE("serialization round-trips to an equal term map") {
  MultiPoly p = MultiPoly::parse("-a*c + b^2", 4);
  CHECK(p.to_string() == "-1*a^1*c^1 + 1*b^2");
  CHECK(MultiPoly::parse(p.to_string(), 4) == p);

  for (std::uint64_t i = 0; i < 100; ++i) {
    MultiPoly q = test_support::random_poly(24, i, 4);
    CHECK(MultiPoly::parse(q.to_string(), 4) == q);
  }
  CHECK(MultiPoly::zero(4).to_string() == "0");
  CHECK(MultiPoly::parse("0", 4).is_zero());
}

TEST_CASE("parser accepts the relaxed input syntax") {
  CHECK(MultiPoly::parse("2*b", 4) == MultiPoly::constant(4, rat(2)) * var4(1));
  CHECK(MultiPoly::parse("-b - d", 4) == -(var4(1) + var4(3)));
  CHECK(MultiPoly::parse("1/2*a^2", 4) ==
        MultiPoly::constant(4, rat(1, 2)) * var4(0) * var4(0));
  CHECK(MultiPoly::parse("3*a*c - b*d", 4) ==
        MultiPoly::constant(4, rat(3)) * var4(0) * var4(2) - var4(1) * var4(3));
  CHECK_THROWS_AS(MultiPoly::parse("a + q", 4), std::invalid_argument);
}

TEST_CASE("graded-lex serialization order") {
  // leading term first: higher degree, then earlier variables
  MultiPoly p = var4(1) * var4(1) + var4(0) + var4(2) * var4(2) * var4(2);
  CHECK(p.to_string() == "1*c^3 + 1*b^2 + 1*a^1");
}

TEST_CASE("term budget aborts oversized products") {
  auto saved = rectpoint::poly_term_budget();
  rectpoint::poly_term_budget() = 8;
  MultiPoly p = MultiPoly::zero(2);
  for (unsigned k = 0; k < 4; ++k) {
    MultiPoly m = MultiPoly::constant(2, rat(1));
    for (unsigned j = 0; j < k; ++j) m = m * MultiPoly::variable(2, 0);
    p = p + m;
  }
  MultiPoly q = p;
  for (unsigned v = 0; v < 4; ++v) {
    MultiPoly m = MultiPoly::constant(2, rat(1));
    for (unsigned j = 0; j < v; ++j) m = m * MultiPoly::variable(2, 1);
    q = q + m;
  }
  CHECK_THROWS_AS(p * q * p * q, rectpoint::budget_exceeded);
  rectpoint::poly_term_budget() = saved;
}

TEST_CASE("schwartz-zippel pre-filter") {
  CHECK(rectpoint::schwartz_zippel_check(MultiPoly::zero(4), 10, 1));
  MultiPoly diff = var4(0) - var4(1);
  CHECK_FALSE(rectpoint::schwartz_zippel_check(diff, 5, 1));
  // deterministic given the seed
  CHECK(rectpoint::schwartz_zippel_check(diff, 5, 1) ==
        rectpoint::schwartz_zippel_check(diff, 5, 1));
  CHECK_THROWS_AS(rectpoint::schwartz_zippel_check(diff, 0, 1), std::invalid_argument);
}

TEST_CASE("content normalization data") {
  MultiPoly p = MultiPoly::constant(2, rat(4)) * MultiPoly::variable(2, 0) +
                MultiPoly::constant(2, rat(6)) * MultiPoly::variable(2, 1);
  CHECK(p.content() == rat(2));
  MultiPoly q = MultiPoly::constant(2, rat(1, 2)) * MultiPoly::variable(2, 0) +
                MultiPoly::constant(2, rat(3, 4)) * MultiPoly::variable(2, 1);
  CHECK(q.content() == rat(1, 4));
  CHECK(MultiPoly::zero(2).content() == rat(0));
}
