#include <random>

#include "doctest.h"
#include "sagbilab/polynomial.hpp"

using namespace sagbilab;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Polynomial random_poly(std::mt19937& rng, bool allow_zero = true) {
  std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, 4);
  std::uniform_int_distribution<std::int64_t> expd(0, 4);
  std::uniform_int_distribution<long> coef(-5, 5);
  Polynomial p(kXY);
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    long c = coef(rng);
    if (c == 0) c = 1;
    p.add_term({expd(rng), expd(rng)}, rat(c, 1 + (i % 3)));
  }
  if (!allow_zero && p.is_zero()) p.add_term({1, 0}, rat(1));
  return p;
}

}  // namespace

TEST_CASE("canonical form basics") {
  Polynomial p(kXY);
  p.add_term({1, 0}, rat(2));
  p.add_term({1, 0}, rat(-2));
  CHECK(p.is_zero());
  CHECK(p.degree() == -1);
  p.add_term({0, 0}, rat(3, 6));
  CHECK(p.is_constant());
  CHECK(p.constant_term() == rat(1, 2));
  CHECK(to_string(p.constant_term()) == "1/2");
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(777);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng), g = random_poly(rng), h = random_poly(rng);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f - f == Polynomial(kXY));
    CHECK(f + (-f) == Polynomial(kXY));
  }
}

TEST_CASE("initial term is multiplicative") {
  std::mt19937 rng(778);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grlex(),
                                    MonomialOrder::grevlex()};
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng, false), g = random_poly(rng, false);
    for (const auto& ord : orders) {
      Term tf = f.initial_term(ord), tg = g.initial_term(ord);
      Term tfg = (f * g).initial_term(ord);
      CHECK(tfg.exponent == exp_add(tf.exponent, tg.exponent));
      CHECK(tfg.coefficient == tf.coefficient * tg.coefficient);
    }
  }
}

TEST_CASE("initial term of zero throws") {
  CHECK_THROWS_AS(Polynomial(kXY).initial_term(MonomialOrder::grevlex()),
                  ZeroPolynomialError);
}

TEST_CASE("ring mismatch is rejected") {
  Polynomial f = parse_polynomial("x", kXY);
  Polynomial g = parse_polynomial("z", {"z"});
  CHECK_THROWS_AS(f + g, RingMismatchError);
  CHECK_THROWS_AS(f * g, RingMismatchError);
}

TEST_CASE("pow and monic") {
  Polynomial f = parse_polynomial("2*x + 2*y", kXY);
  CHECK(f.pow(0) == Polynomial::constant(kXY, rat(1)));
  CHECK(f.pow(3) == f * f * f);
  Polynomial m = f.monic(MonomialOrder::grevlex());
  CHECK(m == parse_polynomial("x + y", kXY));
}

TEST_CASE("homogeneous degree") {
  CHECK(parse_polynomial("x^2 + x*y", kXY).homogeneous_degree() == 2);
  CHECK_FALSE(parse_polynomial("x^2 + y", kXY).homogeneous_degree().has_value());
  CHECK(Polynomial(kXY).homogeneous_degree() == -1);
}

TEST_CASE("parser grammar") {
  CHECK(parse_polynomial("3/2*x^2*y - y + 1", kXY).format() ==
        "3/2*x^2*y - y + 1");
  CHECK(parse_polynomial("-x + x", kXY).is_zero());
  CHECK(parse_polynomial("x y", kXY) == parse_polynomial("x*y", kXY));
  CHECK(parse_polynomial("7", kXY) == Polynomial::constant(kXY, rat(7)));
  CHECK_THROWS_AS(parse_polynomial("x + ", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("z", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x^", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("", kXY), ParseError);
}

TEST_CASE("parse then format is the identity on canonical text") {
  std::mt19937 rng(779);
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng, false);
    CHECK(parse_polynomial(f.format(), kXY) == f);
  }
}

TEST_CASE("json round trip") {
  std::mt19937 rng(780);
  for (int i = 0; i < 50; ++i) {
    Polynomial f = random_poly(rng);
    CHECK(parse_polynomial_json(f.format_json()) == f);
  }
}

TEST_CASE("substitution is a ring homomorphism") {
  std::map<std::string, Polynomial> im{
      {"x", parse_polynomial("u + v", {"u", "v"})},
      {"y", parse_polynomial("u*v", {"u", "v"})}};
  std::mt19937 rng(781);
  for (int i = 0; i < 50; ++i) {
    Polynomial f = random_poly(rng), g = random_poly(rng);
    CHECK((f * g).substitute(im) == f.substitute(im) * g.substitute(im));
    CHECK((f + g).substitute(im) == f.substitute(im) + g.substitute(im));
  }
}
