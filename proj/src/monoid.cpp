#include "sagbilab/monoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "sagbilab/error.hpp"

namespace sagbilab {

namespace {

std::int64_t cross(const ExponentVector& a, const ExponentVector& b) {
  return a[0] * b[1] - a[1] * b[0];
}

std::int64_t dot(const std::vector<std::int64_t>& w, const ExponentVector& p) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * p[i];
  return s;
}

ExponentVector primitive(ExponentVector v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

bool in_box(const ExponentVector& p, std::int64_t bound) {
  for (auto v : p)
    if (v < 0 || v > bound) return false;
  return true;
}

void require_dim2(std::size_t n) {
  if (n != 2) throw DimensionError("cone reasoning needs dimension 2");
}

}  // namespace

AffineMonoid AffineMonoid::from_generators(std::size_t dim,
                                           std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (g.size() != dim) throw DimensionError("generator has wrong length");
    for (auto v : g)
      if (v < 0) throw PreconditionError("negative generator coordinate");
  }
  AffineMonoid m;
  m.dim = dim;
  m.finite_gens = std::move(gens);
  return m;
}

AffineMonoid AffineMonoid::one_n_squared() {
  AffineMonoid m;
  m.dim = 2;
  m.stream = Stream::OneNSquared;
  return m;
}

std::vector<ExponentVector> AffineMonoid::generators_in_box(
    std::int64_t bound) const {
  std::set<ExponentVector> out;
  for (const auto& g : finite_gens)
    if (in_box(g, bound)) out.insert(g);
  for (const auto& fam : families) {
    ExponentVector p = fam.base;
    while (in_box(p, bound)) {
      out.insert(p);
      p = exp_add(p, fam.period);
    }
  }
  if (stream == Stream::OneNSquared) {
    for (std::int64_t n = 0; n * n <= bound && 1 <= bound; ++n)
      out.insert({1, n * n});
  }
  return {out.begin(), out.end()};
}

std::vector<ExponentVector> AffineMonoid::elements_in_box(
    std::int64_t bound) const {
  auto gens = generators_in_box(bound);
  std::set<ExponentVector> members;
  members.insert(ExponentVector(dim, 0));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ExponentVector> snapshot(members.begin(), members.end());
    for (const auto& m : snapshot)
      for (const auto& g : gens) {
        ExponentVector next = exp_add(m, g);
        if (in_box(next, bound) && members.insert(next).second) grew = true;
      }
  }
  return {members.begin(), members.end()};
}

MonoidMembership membership(const AffineMonoid& m, const ExponentVector& p,
                            std::int64_t search_bound) {
  if (p.size() != m.dim) throw DimensionError("point has wrong length");
  if (!in_box(p, search_bound))
    throw PreconditionError("point outside the search box");
  auto gens = m.generators_in_box(search_bound);
  // Breadth-first closure recording which generator reached each point.
  std::map<ExponentVector, ExponentVector> reached_by;
  ExponentVector origin(m.dim, 0);
  reached_by[origin] = origin;
  std::vector<ExponentVector> frontier{origin};
  while (!frontier.empty()) {
    std::vector<ExponentVector> next_frontier;
    for (const auto& q : frontier)
      for (const auto& g : gens) {
        ExponentVector next = exp_add(q, g);
        if (!in_box(next, search_bound)) continue;
        if (reached_by.emplace(next, g).second) next_frontier.push_back(next);
      }
    frontier = std::move(next_frontier);
  }
  MonoidMembership result;
  auto it = reached_by.find(p);
  if (it == reached_by.end()) return result;
  result.member = true;
  std::map<ExponentVector, std::int64_t> counts;
  ExponentVector cur = p;
  while (cur != origin) {
    ExponentVector g = reached_by.at(cur);
    ++counts[g];
    cur = exp_sub(cur, g);
  }
  for (const auto& [g, k] : counts) result.decomposition.emplace_back(g, k);
  return result;
}

std::vector<ExponentVector> irreducibles(const AffineMonoid& m,
                                         std::int64_t box_bound) {
  if (box_bound < 1) throw PreconditionError("box bound must be >= 1");
  auto elements = m.elements_in_box(box_bound);
  std::set<ExponentVector> in_monoid(elements.begin(), elements.end());
  ExponentVector origin(m.dim, 0);
  std::vector<ExponentVector> result;
  for (const auto& x : elements) {
    if (x == origin) continue;
    bool splits = false;
    for (const auto& y : elements) {
      if (y == origin || y == x) continue;
      bool fits = true;
      for (std::size_t i = 0; i < m.dim; ++i)
        if (y[i] > x[i]) fits = false;
      if (!fits) continue;
      if (in_monoid.count(exp_sub(x, y))) {
        splits = true;
        break;
      }
    }
    if (!splits) result.push_back(x);
  }
  return result;
}

Cone2D cone_of(const std::vector<ExponentVector>& points) {
  if (points.empty()) throw PreconditionError("empty point set");
  require_dim2(points[0].size());
  std::vector<ExponentVector> nonzero;
  for (const auto& p : points) {
    require_dim2(p.size());
    if (p[0] != 0 || p[1] != 0) nonzero.push_back(p);
  }
  if (nonzero.empty()) throw PreconditionError("all points are zero");
  // Extreme rays by angle from the x-axis; cross(a,b) > 0 means a is lower.
  ExponentVector low = nonzero[0], high = nonzero[0];
  for (const auto& p : nonzero) {
    if (cross(p, low) > 0) low = p;
    if (cross(high, p) > 0) high = p;
  }
  Cone2D c;
  c.ray1 = primitive(low);
  c.ray2 = primitive(high);
  c.degenerate = (c.ray1 == c.ray2);
  if (!c.degenerate) {
    ExponentVector n1 = primitive({-c.ray1[1], c.ray1[0]});  // >0 toward ray2
    ExponentVector n2 = primitive({c.ray2[1], -c.ray2[0]});  // >0 toward ray1
    c.normal1 = {n1[0], n1[1]};
    c.normal2 = {n2[0], n2[1]};
  }
  return c;
}

bool interior_contains(const Cone2D& c, const ExponentVector& p) {
  if (c.degenerate) throw PreconditionError("degenerate cone has empty interior");
  require_dim2(p.size());
  return dot(c.normal1, p) > 0 && dot(c.normal2, p) > 0;
}

AffineMonoid construct_module_monoid(const ExponentVector& v1,
                                     const ExponentVector& v2,
                                     const std::vector<ExponentVector>& us) {
  require_dim2(v1.size());
  require_dim2(v2.size());
  if (cross(v1, v2) == 0)
    throw PreconditionError("v1 and v2 are linearly dependent");
  Cone2D c = cone_of({v1, v2});
  for (const auto& u : us)
    if (!interior_contains(c, u))
      throw PreconditionError("module base is not interior to the cone");
  AffineMonoid m;
  m.dim = 2;
  m.finite_gens = {v1};
  for (const auto& u : us) m.families.push_back({u, v2});
  return m;
}

FinitenessResult is_finitely_generated(const AffineMonoid& m,
                                       std::int64_t probe_bound) {
  if (m.stream == AffineMonoid::Stream::OneNSquared) {
    FinitenessResult r{FinitenessVerdict::Unknown, {}};
    for (std::int64_t n = 0; n * n <= probe_bound; ++n)
      r.slope_evidence.push_back(Rational(n * n));
    return r;
  }
  if (!m.families.empty()) {
    // Lemma-shaped data: one finite generator v1, common period v2, all
    // bases interior to cone(v1, v2) -> provably not finitely generated.
    bool shaped = m.finite_gens.size() == 1 && m.dim == 2;
    if (shaped) {
      const ExponentVector& v1 = m.finite_gens[0];
      const ExponentVector& v2 = m.families[0].period;
      for (const auto& fam : m.families)
        if (fam.period != v2) shaped = false;
      if (shaped && cross(v1, v2) != 0) {
        Cone2D c = cone_of({v1, v2});
        for (const auto& fam : m.families)
          if (!interior_contains(c, fam.base)) shaped = false;
        if (shaped) return {FinitenessVerdict::No, {}};
      }
    }
    return {FinitenessVerdict::Unknown, {}};
  }
  return {FinitenessVerdict::Yes, {}};
}

FiniteGenerators thm34_finite_generators(const ExponentVector& v1,
                                         const ExponentVector& v2,
                                         const std::vector<ExponentVector>& us) {
  AffineMonoid check = construct_module_monoid(v1, v2, us);  // validates
  (void)check;
  std::int64_t det = cross(v1, v2);
  FiniteGenerators out;
  out.vars = {"x", "y"};
  Polynomial binomial =
      Polynomial::monomial(out.vars, v1, Rational(1)) +
      Polynomial::monomial(out.vars, v2, Rational(1));
  out.generators.push_back(binomial);
  std::set<ExponentVector> seen;
  for (const auto& u : us) {
    // u = alpha v1 + beta v2 with alpha, beta > 0; scale to the minimal
    // l with l*u = a v1 + b v2 integral.
    Rational alpha = rat(cross(u, v2), det);
    Rational beta = rat(cross(v1, u), det);
    if (alpha <= 0 || beta <= 0)
      throw PreconditionError("module base is not interior to the cone");
    mpz_class l_z;
    mpz_lcm(l_z.get_mpz_t(), alpha.get_den().get_mpz_t(),
            beta.get_den().get_mpz_t());
    Rational l_q(l_z);
    Rational a_q = alpha * l_q, b_q = beta * l_q;
    ModuleGeneratorData d;
    d.l = static_cast<std::int64_t>(l_z.get_si());
    d.a = static_cast<std::int64_t>(mpz_class(a_q.get_num()).get_si());
    d.b = static_cast<std::int64_t>(mpz_class(b_q.get_num()).get_si());
    out.per_u.push_back(d);
    for (std::int64_t k = 0; k < d.a + d.b; ++k) {
      ExponentVector e = exp_add(u, exp_scale(v2, k));
      if (seen.insert(e).second)
        out.generators.push_back(Polynomial::monomial(out.vars, e, Rational(1)));
    }
  }
  return out;
}

BinomialMatrixData thm34_matrix(std::int64_t a) {
  if (a < 1) throw PreconditionError("matrix parameter must be >= 1");
  const std::size_t n = static_cast<std::size_t>(a) + 1;
  auto binom = [](std::int64_t top, std::int64_t bot) -> Rational {
    if (bot < 0 || bot > top) return Rational(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(top),
                 static_cast<unsigned long>(bot));
    return Rational(z);
  };
  BinomialMatrixData out;
  out.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
  out.matrix[0][0] = 1;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p)
      out.matrix[p][k] =
          binom(a + 1 - static_cast<std::int64_t>(k),
                static_cast<std::int64_t>(p) - static_cast<std::int64_t>(k) + 1);

  // Gaussian elimination on [A | e_a]: determinant and the solve in one pass.
  std::vector<std::vector<Rational>> work = out.matrix;
  std::vector<Rational> rhs(n, Rational(0));
  rhs[n - 1] = 1;
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && work[piv][col] == 0) ++piv;
    if (piv == n) {
      out.determinant = 0;
      out.regular = false;
      return out;
    }
    if (piv != col) {
      std::swap(work[piv], work[col]);
      std::swap(rhs[piv], rhs[col]);
      det = -det;
    }
    det *= work[col][col];
    Rational inv = Rational(1) / work[col][col];
    for (auto& v : work[col]) v *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || work[r][col] == 0) continue;
      Rational f = work[r][col];
      for (std::size_t c = 0; c < n; ++c) work[r][c] -= f * work[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  out.determinant = det;
  out.regular = det != 0;
  out.solve = std::move(rhs);
  return out;
}

}  // namespace sagbilab
