#include <random>

#include "doctest.h"
#include "hopfint/errors.hpp"
#include "hopfint/scalars.hpp"
#include "support.hpp"

using namespace hopfint;
using hopfint::test::Q;
using hopfint::test::qq;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  Poly a = P({1, 0, -1});
  Poly b = P({1, 1});
  CHECK(a.to_string() == "1 - q^2");
  CHECK(Poly::divmod(a, b).first == P({1, -1}));
  CHECK(Poly::divmod(a, b).second.is_zero());
  CHECK(Poly::gcd(a, P({-1, 0, 0, 1})) == P({-1, 1}));
  CHECK(Poly::monomial(Rational(3, 2), 2).to_string() == "3/2*q^2");
  CHECK(Poly().to_string() == "0");
  CHECK(P({2, -3}).eval(Rational(1, 3)) == 1);
  CHECK(a.valuation() == 0);
  CHECK(Poly::monomial(1, 3).valuation() == 3);
}

TEST_CASE("canonical rational functions") {
  RatFunc x = (RatFunc(1) - qq() * qq()) / (RatFunc(1) - qq());
  CHECK(x == RatFunc(1) + qq());
  CHECK(x.to_string() == "1 + q");

  RatFunc y = RatFunc(2) / (RatFunc(4) + RatFunc(4) * qq());
  CHECK(y.den() == P({1, 1}));
  CHECK(y.to_string() == "1/2/(1 + q)");

  CHECK(RatFunc::q_pow(-1).to_string() == "1/q");
  CHECK((RatFunc::q_pow(-2) * qq()) == RatFunc::q_pow(-1));
  CHECK((Q(1, 2) + Q(1, 3)).to_string() == "5/6");
  CHECK((RatFunc(1) - qq() * qq()).needs_parens_as_factor());
  CHECK_FALSE(RatFunc::q_pow(-1).needs_parens_as_factor());
  CHECK((-qq()).has_negative_sign());
  CHECK(RatFunc(0).is_zero());
  CHECK(Q(7).is_constant());
  CHECK_FALSE(qq().is_constant());
}

TEST_CASE("evaluation and errors") {
  RatFunc x = RatFunc(1) / (RatFunc(1) - qq());
  CHECK(x.eval(Rational(1, 2)) == 2);
  CHECK_THROWS_AS(x.eval(1), PoleAtPoint);
  CHECK_THROWS_AS(RatFunc(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(qq() / RatFunc(0), DivisionByZero);
  CHECK(rf_eval(qq() * qq(), 3) == 9);
  CHECK(rf_normalize(P({0, 2}), P({0, 0, 4})) == RatFunc(Rational(1, 2)) / qq());
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-4, 4);
  auto rnd = [&]() {
    Poly n = P({c(rng), c(rng), c(rng)});
    Poly d = P({c(rng), c(rng), 1});
    return RatFunc::normalize(n, d);
  };
  for (int t = 0; t < 200; ++t) {
    RatFunc a = rnd(), b = rnd(), d = rnd();
    CHECK((a + b) + d == a + (b + d));
    CHECK((a * b) * d == a * (b * d));
    CHECK(a * (b + d) == a * b + a * d);
    CHECK(a - a == RatFunc(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == RatFunc(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}
