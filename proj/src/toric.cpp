#include "sagbilab/toric.hpp"

#include <algorithm>
#include <numeric>

#include "sagbilab/error.hpp"

namespace sagbilab {

ExponentMatrix ExponentMatrix::from_columns(std::vector<ExponentVector> cols) {
  if (cols.empty()) throw PreconditionError("matrix needs at least one column");
  std::size_t n = cols[0].size();
  for (const auto& c : cols) {
    if (c.size() != n) throw DimensionError("columns of different heights");
    for (auto v : c)
      if (v < 0) throw PreconditionError("negative matrix entry");
  }
  return {n, std::move(cols)};
}

namespace {

std::vector<std::string> relation_vars(std::size_t s) {
  std::vector<std::string> vars;
  vars.reserve(s);
  for (std::size_t i = 0; i < s; ++i) vars.push_back("X" + std::to_string(i));
  return vars;
}

// Split a pure-difference binomial into disjoint-support sides, larger side
// first under degree-then-lex of the relation ring.
Polynomial normalize_binomial(const Polynomial& g,
                              const std::vector<std::string>& xvars) {
  if (g.term_count() != 2)
    throw PreconditionError("toric eliminant is not a binomial");
  auto it = g.terms().begin();
  ExponentVector e1 = it->first;
  Rational c1 = it->second;
  ++it;
  ExponentVector e2 = it->first;
  Rational c2 = it->second;
  if (c1 + c2 != 0)
    throw PreconditionError("toric eliminant is not a pure difference");
  // Strip the common monomial factor.
  ExponentVector common(e1.size());
  for (std::size_t i = 0; i < e1.size(); ++i) common[i] = std::min(e1[i], e2[i]);
  e1 = exp_sub(e1, common);
  e2 = exp_sub(e2, common);
  MonomialOrder ord = MonomialOrder::grlex();
  if (order_less(ord, e1, e2)) {
    std::swap(e1, e2);
    std::swap(c1, c2);
  }
  Polynomial r = Polynomial::monomial(xvars, e1, Rational(1));
  return r - Polynomial::monomial(xvars, e2, Rational(1));
}

}  // namespace

BinomialIdeal toric_ideal(const ExponentMatrix& a, std::size_t max_pairs) {
  const std::size_t n = a.n;
  const std::size_t s = a.columns.size();
  // Work with the columns in ascending order; the elimination basis is far
  // smaller for grouped columns, and the result is mapped back afterwards.
  std::vector<std::size_t> perm(s);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&a](std::size_t x, std::size_t y) {
    return a.columns[x] != a.columns[y] ? a.columns[x] < a.columns[y] : x < y;
  });

  // Ring Q[t0..t{n-1}, X0..X{s-1}] with the t-block eliminated.
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back("t" + std::to_string(i));
  std::vector<std::string> xvars = relation_vars(s);
  vars.insert(vars.end(), xvars.begin(), xvars.end());

  Ideal ideal{vars, {}};
  for (std::size_t i = 0; i < s; ++i) {
    ExponentVector ex(vars.size(), 0);
    ex[n + i] = 1;
    ExponentVector em(vars.size(), 0);
    for (std::size_t c = 0; c < n; ++c) em[c] = a.columns[perm[i]][c];
    ideal.generators.push_back(Polynomial::monomial(vars, ex, Rational(1)) -
                               Polynomial::monomial(vars, em, Rational(1)));
  }
  std::vector<int> elim(n);
  std::iota(elim.begin(), elim.end(), 0);
  GroebnerBasis gb = buchberger(ideal, MonomialOrder::block_elim(elim), max_pairs);

  BinomialIdeal result{xvars, {}};
  for (const auto& g : gb.elements) {
    bool uses_t = false;
    for (const auto& [e, c] : g.terms())
      for (std::size_t i = 0; i < n && !uses_t; ++i)
        if (e[i] != 0) uses_t = true;
    if (uses_t) continue;
    Polynomial projected(xvars);
    for (const auto& [e, c] : g.terms()) {
      ExponentVector back(s, 0);
      for (std::size_t i = 0; i < s; ++i) back[perm[i]] = e[n + i];
      projected.add_term(back, c);
    }
    result.generators.push_back(normalize_binomial(projected, xvars));
  }
  MonomialOrder ord = MonomialOrder::grlex();
  std::sort(result.generators.begin(), result.generators.end(),
            [&ord](const Polynomial& p, const Polynomial& q) {
              return order_less(ord, p.initial_exponent(ord),
                                q.initial_exponent(ord));
            });
  return result;
}

std::vector<std::vector<std::int64_t>> kernel_lattice(const ExponentMatrix& a) {
  const std::size_t n = a.n;
  const std::size_t s = a.columns.size();
  // Row-reduce the n x s matrix over Q.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(s));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < s; ++c) m[r][c] = Rational(a.columns[c][r]);

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < s && row < n; ++col) {
    std::size_t pr = row;
    while (pr < n && m[pr][col] == 0) ++pr;
    if (pr == n) continue;
    std::swap(m[row], m[pr]);
    Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = 0; c < s; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<std::vector<std::int64_t>> basis;
  std::vector<char> is_pivot(s, 0);
  for (auto c : pivot_col) is_pivot[c] = 1;
  for (std::size_t free_col = 0; free_col < s; ++free_col) {
    if (is_pivot[free_col]) continue;
    // Kernel vector: free_col = 1, pivots solve to -m[r][free_col].
    std::vector<Rational> v(s, Rational(0));
    v[free_col] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -m[r][free_col];
    // Clear denominators, divide by content.
    mpz_class lcm_den(1);
    for (const auto& q : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                                    q.get_den().get_mpz_t());
    std::vector<mpz_class> w(s);
    for (std::size_t c = 0; c < s; ++c)
      w[c] = v[c].get_num() * (lcm_den / v[c].get_den());
    mpz_class g(0);
    for (const auto& z : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    std::vector<std::int64_t> out(s);
    for (std::size_t c = 0; c < s; ++c) {
      mpz_class z = g == 0 ? w[c] : mpz_class(w[c] / g);
      if (!z.fits_slong_p())
        throw ExponentOverflowError("kernel vector entry too large");
      out[c] = z.get_si();
    }
    basis.push_back(std::move(out));
  }
  return basis;
}

}  // namespace sagbilab
