#include <functional>
#include <random>

#include "doctest.h"
#include "sagbilab/toric.hpp"

using namespace sagbilab;

namespace {

Polynomial monomial_image(const ExponentMatrix& A, const ExponentVector& alpha,
                          const std::vector<std::string>& xvars) {
  ExponentVector e(A.n, 0);
  for (std::size_t i = 0; i < A.columns.size(); ++i)
    e = exp_add(e, exp_scale(A.columns[i], alpha[i]));
  return Polynomial::monomial(xvars, e);
}

// X^alpha - X^beta for every split of a kernel-like pair; generators checked
// by substitution into the monomial map.
bool vanishes_under_map(const ExponentMatrix& A, const Polynomial& g) {
  std::vector<std::string> xvars;
  for (std::size_t i = 0; i < A.n; ++i) xvars.push_back("x" + std::to_string(i));
  std::map<std::string, Polynomial> images;
  for (std::size_t i = 0; i < A.columns.size(); ++i)
    images.emplace("X" + std::to_string(i),
                   Polynomial::monomial(xvars, A.columns[i]));
  return g.substitute(images).is_zero();
}

}  // namespace

TEST_CASE("toric ideal examples") {
  SUBCASE("twisted cubic slice") {
    BinomialIdeal I = toric_ideal(ExponentMatrix::from_columns({{1, 0}, {1, 1}, {1, 2}}));
    REQUIRE(I.generators.size() == 1);
    CHECK(I.generators[0] == parse_polynomial("X0*X2 - X1^2", I.vars));
  }
  SUBCASE("independent columns give no relations") {
    BinomialIdeal I = toric_ideal(ExponentMatrix::from_columns({{1, 0}, {0, 1}}));
    CHECK(I.generators.empty());
  }
  SUBCASE("squares column pattern at m=2") {
    BinomialIdeal I = toric_ideal(ExponentMatrix::from_columns({{1, 0}, {1, 1}, {1, 4}}));
    REQUIRE(I.generators.size() == 1);
    CHECK(I.generators[0] == parse_polynomial("X0^3*X2 - X1^4", I.vars));
  }
  SUBCASE("duplicate columns") {
    BinomialIdeal I = toric_ideal(ExponentMatrix::from_columns({{2, 1}, {2, 1}}));
    REQUIRE(I.generators.size() == 1);
    CHECK(I.generators[0] == parse_polynomial("X0 - X1", I.vars));
  }
}

TEST_CASE("kernel lattice examples") {
  CHECK(kernel_lattice(ExponentMatrix::from_columns({{1, 0}, {1, 1}, {1, 2}})) ==
        std::vector<std::vector<std::int64_t>>{{1, -2, 1}});
  CHECK(kernel_lattice(ExponentMatrix::from_columns({{1, 0}, {0, 1}})).empty());
  auto dup = kernel_lattice(ExponentMatrix::from_columns({{2, 1}, {2, 1}}));
  REQUIRE(dup.size() == 1);
  CHECK((dup[0] == std::vector<std::int64_t>{1, -1} ||
         dup[0] == std::vector<std::int64_t>{-1, 1}));
}

TEST_CASE("soundness: every generator maps to zero") {
  std::mt19937 rng(91);
  std::uniform_int_distribution<std::int64_t> entry(0, 4);
  std::uniform_int_distribution<int> scount(2, 4);
  for (int t = 0; t < 15; ++t) {
    std::vector<ExponentVector> cols;
    for (int i = 0, s = scount(rng); i < s; ++i) {
      ExponentVector c{entry(rng), entry(rng)};
      if (c[0] == 0 && c[1] == 0) c[0] = 1;
      cols.push_back(c);
    }
    ExponentMatrix A = ExponentMatrix::from_columns(cols);
    BinomialIdeal I = toric_ideal(A);
    for (const auto& g : I.generators) {
      CHECK(vanishes_under_map(A, g));
      CHECK(g.term_count() == 2);
    }
    // kernel basis vectors really lie in the kernel
    for (const auto& v : kernel_lattice(A)) {
      for (std::size_t row = 0; row < A.n; ++row) {
        std::int64_t dot = 0;
        for (std::size_t i = 0; i < cols.size(); ++i)
          dot += cols[i][row] * v[i];
        CHECK(dot == 0);
      }
    }
  }
}

TEST_CASE("completeness on small instances") {
  // every binomial X^a - X^b with Aa = Ab and |a|,|b| <= 4 reduces to zero
  std::vector<std::vector<ExponentVector>> instances{
      {{1, 0}, {1, 1}, {1, 2}},
      {{1, 0}, {1, 1}, {1, 4}},
      {{2, 1}, {1, 2}, {3, 3}},
      {{1, 0}, {2, 1}, {2, 2}, {3, 3}},
  };
  for (const auto& cols : instances) {
    ExponentMatrix A = ExponentMatrix::from_columns(cols);
    BinomialIdeal I = toric_ideal(A);
    auto ord = MonomialOrder::grevlex();
    std::size_t s = cols.size();
    std::vector<ExponentVector> tuples;
    std::function<void(ExponentVector&, std::size_t, std::int64_t)> gen =
        [&](ExponentVector& cur, std::size_t i, std::int64_t budget) {
          if (i == s) {
            tuples.push_back(cur);
            return;
          }
          for (std::int64_t v = 0; v <= budget; ++v) {
            cur.push_back(v);
            gen(cur, i + 1, budget - v);
            cur.pop_back();
          }
        };
    ExponentVector cur;
    gen(cur, 0, 4);
    auto image = [&](const ExponentVector& t) {
      ExponentVector e(A.n, 0);
      for (std::size_t i = 0; i < s; ++i)
        e = exp_add(e, exp_scale(cols[i], t[i]));
      return e;
    };
    int checked = 0;
    for (std::size_t a = 0; a < tuples.size(); ++a)
      for (std::size_t b = a + 1; b < tuples.size(); ++b) {
        if (image(tuples[a]) != image(tuples[b])) continue;
        Polynomial bin = Polynomial::monomial(I.vars, tuples[a]) -
                         Polynomial::monomial(I.vars, tuples[b]);
        if (bin.is_zero()) continue;
        CHECK(remainder(bin, I.generators, ord).is_zero());
        ++checked;
      }
    if (cols.size() > 2) CHECK(checked > 0);
  }
}

TEST_CASE("homogeneous columns give homogeneous relations") {
  BinomialIdeal I = toric_ideal(
      ExponentMatrix::from_columns({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
  CHECK(!I.generators.empty());
  for (const auto& g : I.generators)
    CHECK(g.homogeneous_degree().has_value());
}

TEST_CASE("invalid matrices are rejected") {
  CHECK_THROWS_AS(ExponentMatrix::from_columns({}), PreconditionError);
  CHECK_THROWS_AS(ExponentMatrix::from_columns({{1, 0}, {1}}), DimensionError);
  CHECK_THROWS_AS(ExponentMatrix::from_columns({{-1, 0}}), PreconditionError);
}
