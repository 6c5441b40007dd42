#include <algorithm>
#include <set>

#include "doctest.h"
#include "sagbilab/monoid.hpp"
#include "sagbilab/sagbi.hpp"

using namespace sagbilab;

namespace {

// brute-force irreducibles: monoid elements in the box with no splitting
std::vector<ExponentVector> brute_irreducibles(const AffineMonoid& m,
                                               std::int64_t bound) {
  auto elems = m.elements_in_box(bound);
  std::set<ExponentVector> in_monoid(elems.begin(), elems.end());
  std::vector<ExponentVector> out;
  for (const auto& e : elems) {
    if (total_degree(e) == 0) continue;
    bool splits = false;
    for (const auto& a : elems) {
      if (total_degree(a) == 0 || a == e || !exp_divides(a, e)) continue;
      ExponentVector b = exp_sub(e, a);
      if (total_degree(b) > 0 && in_monoid.count(b)) {
        splits = true;
        break;
      }
    }
    if (!splits) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("generator and element enumeration") {
  AffineMonoid m = AffineMonoid::from_generators(2, {{1, 0}, {0, 2}});
  auto gens = m.generators_in_box(5);
  CHECK(gens == std::vector<ExponentVector>{{0, 2}, {1, 0}});
  auto elems = m.elements_in_box(2);
  std::set<ExponentVector> got(elems.begin(), elems.end());
  std::set<ExponentVector> expect{{0, 0}, {1, 0}, {2, 0}, {0, 2}, {1, 2}, {2, 2}};
  CHECK(got == expect);
}

TEST_CASE("family and stream truncation") {
  AffineMonoid fam;
  fam.dim = 2;
  fam.families.push_back({{2, 1}, {0, 1}});
  auto g = fam.generators_in_box(4);
  CHECK(g == std::vector<ExponentVector>{{2, 1}, {2, 2}, {2, 3}, {2, 4}});

  AffineMonoid s = AffineMonoid::one_n_squared();
  auto gs = s.generators_in_box(10);
  CHECK(gs == std::vector<ExponentVector>{{1, 0}, {1, 1}, {1, 4}, {1, 9}});
}

TEST_CASE("membership with decomposition") {
  AffineMonoid m = AffineMonoid::from_generators(2, {{1, 1}, {2, 0}});
  SUBCASE("positive case reconstructs the point") {
    MonoidMembership r = membership(m, {4, 2}, 10);
    CHECK(r.member);
    ExponentVector sum(2, 0);
    for (const auto& [g, k] : r.decomposition)
      sum = exp_add(sum, exp_scale(g, k));
    CHECK(sum == ExponentVector{4, 2});
  }
  SUBCASE("negative case") {
    CHECK_FALSE(membership(m, {1, 0}, 10).member);
    CHECK_FALSE(membership(m, {3, 2}, 10).member);
  }
  SUBCASE("origin is always a member") {
    CHECK(membership(m, {0, 0}, 10).member);
  }
}

TEST_CASE("irreducibles match the brute-force oracle") {
  std::vector<AffineMonoid> cases;
  cases.push_back(AffineMonoid::from_generators(2, {{1, 0}, {0, 2}}));
  cases.push_back(AffineMonoid::from_generators(2, {{2, 1}, {1, 2}, {3, 3}}));
  cases.push_back(AffineMonoid::one_n_squared());
  {
    AffineMonoid fam;
    fam.dim = 2;
    fam.finite_gens = {{1, 0}};
    fam.families.push_back({{2, 1}, {0, 1}});
    cases.push_back(fam);
  }
  for (const auto& m : cases)
    for (std::int64_t b : {6, 12, 20})
      CHECK(irreducibles(m, b) == brute_irreducibles(m, b));
}

TEST_CASE("irreducibles of the squares stream in a large box") {
  auto irr = irreducibles(AffineMonoid::one_n_squared(), 26);
  CHECK(irr == std::vector<ExponentVector>{{1, 0}, {1, 1}, {1, 4}, {1, 9},
                                           {1, 16}, {1, 25}});
}

TEST_CASE("cone_of") {
  SUBCASE("two extreme rays, primitive output") {
    Cone2D c = cone_of({{2, 0}, {2, 2}, {3, 1}, {4, 0}});
    CHECK(c.ray1 == ExponentVector{1, 0});
    CHECK(c.ray2 == ExponentVector{1, 1});
    CHECK_FALSE(c.degenerate);
    // normals: non-negative on every input point, zero on their own ray
    for (const auto& p : std::vector<ExponentVector>{{2, 0}, {2, 2}, {3, 1}}) {
      CHECK(c.normal1[0] * p[0] + c.normal1[1] * p[1] >= 0);
      CHECK(c.normal2[0] * p[0] + c.normal2[1] * p[1] >= 0);
    }
    CHECK(c.normal1[0] * c.ray1[0] + c.normal1[1] * c.ray1[1] == 0);
    CHECK(c.normal2[0] * c.ray2[0] + c.normal2[1] * c.ray2[1] == 0);
  }
  SUBCASE("degenerate single-ray cone") {
    Cone2D c = cone_of({{2, 2}, {3, 3}});
    CHECK(c.degenerate);
    CHECK(c.ray1 == ExponentVector{1, 1});
  }
  SUBCASE("interior membership") {
    Cone2D c = cone_of({{1, 0}, {0, 1}});
    CHECK(interior_contains(c, {1, 1}));
    CHECK_FALSE(interior_contains(c, {1, 0}));
    CHECK_FALSE(interior_contains(c, {0, 1}));
    Cone2D d = cone_of({{1, 1}});
    CHECK_THROWS_AS(interior_contains(d, {1, 1}), PreconditionError);
  }
}

TEST_CASE("construct_module_monoid") {
  SUBCASE("axis-aligned instance") {
    AffineMonoid m = construct_module_monoid({1, 0}, {0, 1}, {{2, 1}});
    auto g = m.generators_in_box(4);
    CHECK(g == std::vector<ExponentVector>{{1, 0}, {2, 1}, {2, 2}, {2, 3}, {2, 4}});
  }
  SUBCASE("slanted instance accepts interior points only") {
    CHECK_NOTHROW(construct_module_monoid({2, 1}, {1, 2}, {{3, 3}}));
    CHECK_THROWS_AS(construct_module_monoid({2, 1}, {1, 2}, {{2, 1}}),
                    PreconditionError);
    CHECK_THROWS_AS(construct_module_monoid({1, 1}, {2, 2}, {{3, 3}}),
                    PreconditionError);
  }
}

TEST_CASE("finiteness verdicts") {
  CHECK(is_finitely_generated(AffineMonoid::from_generators(2, {{1, 0}, {1, 5}}), 20)
            .verdict == FinitenessVerdict::Yes);
  CHECK(is_finitely_generated(construct_module_monoid({1, 0}, {0, 1}, {{2, 1}}), 20)
            .verdict == FinitenessVerdict::No);
  FinitenessResult s = is_finitely_generated(AffineMonoid::one_n_squared(), 20);
  CHECK(s.verdict == FinitenessVerdict::Unknown);
  // the extreme slope keeps strictly increasing in the probe window
  REQUIRE(s.slope_evidence.size() >= 3);
  for (std::size_t i = 1; i < s.slope_evidence.size(); ++i)
    CHECK(s.slope_evidence[i - 1] < s.slope_evidence[i]);
}

TEST_CASE("finite generator construction") {
  SUBCASE("axis instance") {
    FiniteGenerators fg = thm34_finite_generators({1, 0}, {0, 1}, {{2, 1}});
    REQUIRE(fg.per_u.size() == 1);
    CHECK(fg.per_u[0].l == 1);
    CHECK(fg.per_u[0].a == 2);
    CHECK(fg.per_u[0].b == 1);
    std::vector<Polynomial> expect{
        parse_polynomial("x + y", fg.vars),
        parse_polynomial("x^2*y", fg.vars),
        parse_polynomial("x^2*y^2", fg.vars),
        parse_polynomial("x^2*y^3", fg.vars),
    };
    CHECK(fg.generators == expect);
  }
  SUBCASE("slanted instance") {
    FiniteGenerators fg = thm34_finite_generators({2, 1}, {1, 2}, {{3, 3}});
    REQUIRE(fg.per_u.size() == 1);
    CHECK(fg.per_u[0].l == 1);
    CHECK(fg.per_u[0].a == 1);
    CHECK(fg.per_u[0].b == 1);
    std::vector<Polynomial> expect{
        parse_polynomial("x^2*y + x*y^2", fg.vars),
        parse_polynomial("x^3*y^3", fg.vars),
        parse_polynomial("x^4*y^5", fg.vars),
    };
    CHECK(fg.generators == expect);
  }
}

TEST_CASE("binomial change-of-basis matrix") {
  for (std::int64_t a = 1; a <= 12; ++a) {
    BinomialMatrixData d = thm34_matrix(a);
    CHECK(d.regular);
    CHECK(d.determinant != 0);
    REQUIRE(d.matrix.size() == static_cast<std::size_t>(a + 1));
    REQUIRE(d.solve.size() == static_cast<std::size_t>(a + 1));
  }
  // reconstruction: m_a = sum_k solve[k] * f_k with f_k = x^k (x+y)^{a+1-k} y-part
  // checked structurally via the defining expansion f_k = sum_p A[p][k] m_p
  for (std::int64_t a = 1; a <= 8; ++a) {
    BinomialMatrixData d = thm34_matrix(a);
    for (std::int64_t p = 0; p <= a; ++p) {
      Rational acc(0);
      for (std::int64_t k = 0; k <= a; ++k)
        acc += d.matrix[static_cast<std::size_t>(p)][static_cast<std::size_t>(k)] *
               d.solve[static_cast<std::size_t>(k)];
      CHECK(acc == (p == a ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("cross-module: truncated sagbi initials generate the module monoid") {
  for (auto [v1, v2, u] : std::vector<std::tuple<ExponentVector, ExponentVector,
                                                 ExponentVector>>{
           {{1, 0}, {0, 1}, {2, 1}},
           {{1, 0}, {0, 1}, {4, 3}},
           {{2, 1}, {1, 2}, {3, 3}}}) {
    FiniteGenerators fg = thm34_finite_generators(v1, v2, {u});
    GeneratorSet F =
        GeneratorSet::make(fg.vars, MonomialOrder::grevlex(), fg.generators);
    std::int64_t max_degree = 14;
    SagbiReport r = sagbi_construct(F, max_degree);
    AffineMonoid m = construct_module_monoid(v1, v2, {u});
    std::vector<ExponentVector> expected;
    for (const auto& g : m.generators_in_box(max_degree))
      if (total_degree(g) <= max_degree) expected.push_back(g);
    std::sort(expected.begin(), expected.end());
    auto inits = r.basis.initial_exponents();
    std::sort(inits.begin(), inits.end());
    CHECK(inits == expected);
  }
}
