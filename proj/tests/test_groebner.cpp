#include <random>

#include "doctest.h"
#include "sagbilab/groebner.hpp"

using namespace sagbilab;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Polynomial p(const std::string& s) { return parse_polynomial(s, kXY); }

Polynomial random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> nterms(1, 3);
  std::uniform_int_distribution<std::int64_t> expd(0, 3);
  std::uniform_int_distribution<long> coef(-3, 3);
  Polynomial f(kXY);
  for (int i = 0, n = nterms(rng); i < n; ++i) {
    long c = coef(rng);
    if (c == 0) c = 2;
    f.add_term({expd(rng), expd(rng)}, rat(c));
  }
  if (f.is_zero()) f.add_term({1, 1}, rat(1));
  return f;
}

}  // namespace

TEST_CASE("division examples") {
  auto lex = MonomialOrder::lex();
  SUBCASE("x^2*y mod x-y leaves y^3") {
    auto [q, r] = divide(p("x^2*y"), {p("x - y")}, lex);
    CHECK(r == p("y^3"));
    CHECK(q[0] * p("x - y") + r == p("x^2*y"));
  }
  SUBCASE("member of the divisor list reduces to zero") {
    CHECK(remainder(p("x - y"), {p("x - y")}, lex).is_zero());
  }
  SUBCASE("constants pass through") {
    CHECK(remainder(p("1"), {p("x - y"), p("y^2")}, lex) == p("1"));
  }
  SUBCASE("zero dividend") {
    auto [q, r] = divide(Polynomial(kXY), {p("x")}, lex);
    CHECK(r.is_zero());
    CHECK(q[0].is_zero());
  }
}

TEST_CASE("division contract on random inputs") {
  std::mt19937 rng(31);
  auto ord = MonomialOrder::grevlex();
  for (int i = 0; i < 200; ++i) {
    Polynomial f = random_poly(rng);
    std::vector<Polynomial> G{random_poly(rng), random_poly(rng)};
    auto [q, r] = divide(f, G, ord);
    Polynomial back = r;
    for (std::size_t j = 0; j < G.size(); ++j) back = back + q[j] * G[j];
    CHECK(back == f);
    for (const auto& e : r.support())
      for (const auto& g : G)
        CHECK_FALSE(exp_divides(g.initial_exponent(ord), e));
  }
}

TEST_CASE("s-polynomial") {
  auto lex = MonomialOrder::lex();
  CHECK(s_polynomial(p("x*y - 1"), p("x*y - 1"), lex).is_zero());
  CHECK(s_polynomial(p("x^2 - y"), p("x*y - 1"), lex) == p("x - y^2"));
  // coprime leading monomials: S-poly reduces to zero over the pair
  Polynomial f = p("x^2 - y"), g = p("y^2 - 1");
  CHECK(remainder(s_polynomial(f, g, lex), {f, g}, lex).is_zero());
}

TEST_CASE("buchberger examples") {
  auto lex = MonomialOrder::lex();
  SUBCASE("principal ideal") {
    GroebnerBasis gb = buchberger(Ideal{kXY, {p("2*x - 2*y")}}, lex);
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == p("x - y"));
  }
  SUBCASE("already reduced binomial") {
    std::vector<std::string> v{"X0", "X1", "X2"};
    Polynomial b = parse_polynomial("X0*X2 - X1^2", v);
    GroebnerBasis gb = buchberger(Ideal{v, {b}}, lex);
    REQUIRE(gb.elements.size() == 1);
    CHECK(gb.elements[0] == b);
  }
  SUBCASE("classic two-generator ideal") {
    GroebnerBasis gb = buchberger(Ideal{kXY, {p("x^2 - y"), p("x*y - 1")}}, lex);
    // lex GB of this ideal: {y^3 - 1? no: x = y^2, y^3 = 1}
    std::vector<Polynomial> expect{p("y^3 - 1"), p("x - y^2")};
    CHECK(gb.elements == expect);
  }
}

TEST_CASE("buchberger properties on random small ideals") {
  std::mt19937 rng(32);
  auto ord = MonomialOrder::grevlex();
  for (int i = 0; i < 40; ++i) {
    std::vector<Polynomial> gens;
    std::uniform_int_distribution<int> ngens(1, 3);
    for (int j = 0, n = ngens(rng); j < n; ++j) gens.push_back(random_poly(rng));
    GroebnerBasis gb = buchberger(Ideal{kXY, gens}, ord);
    // every input generator reduces to zero
    for (const auto& g : gens)
      CHECK(remainder(g, gb.elements, ord).is_zero());
    // every S-polynomial of the output reduces to zero
    for (std::size_t a = 0; a < gb.elements.size(); ++a)
      for (std::size_t b = a + 1; b < gb.elements.size(); ++b)
        CHECK(remainder(s_polynomial(gb.elements[a], gb.elements[b], ord),
                        gb.elements, ord)
                  .is_zero());
    // reduced: monic, no cross-divisible terms
    for (std::size_t a = 0; a < gb.elements.size(); ++a) {
      CHECK(gb.elements[a].initial_term(ord).coefficient == rat(1));
      for (std::size_t b = 0; b < gb.elements.size(); ++b) {
        if (a == b) continue;
        for (const auto& e : gb.elements[a].support())
          CHECK_FALSE(exp_divides(gb.elements[b].initial_exponent(ord), e));
      }
    }
    // determinism
    GroebnerBasis again = buchberger(Ideal{kXY, gens}, ord);
    CHECK(again.elements == gb.elements);
  }
}

TEST_CASE("pair cap raises a resource error") {
  CHECK_THROWS_AS(
      buchberger(Ideal{kXY, {p("x^3 - y"), p("x*y^2 - x - 1"), p("y^3 - x^2")}},
                 MonomialOrder::lex(), 1),
      ResourceLimitError);
}
