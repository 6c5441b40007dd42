#include "sagbilab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>

#include "sagbilab/error.hpp"

namespace sagbilab {

std::size_t default_pair_cap() {
  if (const char* env = std::getenv("SAGBI_MAX_PAIRS")) {
    long v = std::atol(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

std::pair<std::vector<Polynomial>, Polynomial> divide(
    const Polynomial& f, const std::vector<Polynomial>& divisors,
    const MonomialOrder& order) {
  if (divisors.empty()) throw PreconditionError("empty divisor list");
  for (const auto& g : divisors)
    if (g.is_zero()) throw PreconditionError("zero divisor polynomial");

  std::vector<Term> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) leads.push_back(g.initial_term(order));

  std::vector<Polynomial> quotients(divisors.size(), Polynomial(f.vars()));
  Polynomial r(f.vars());
  Polynomial p = f;
  while (!p.is_zero()) {
    Term lt = p.initial_term(order);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!exp_divides(leads[i].exponent, lt.exponent)) continue;
      Rational c = lt.coefficient / leads[i].coefficient;
      Polynomial m = Polynomial::monomial(
          f.vars(), exp_sub(lt.exponent, leads[i].exponent), c);
      quotients[i] = quotients[i] + m;
      p = p - m * divisors[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial m = Polynomial::monomial(f.vars(), lt.exponent, lt.coefficient);
      r = r + m;
      p = p - m;
    }
  }
  return {std::move(quotients), std::move(r)};
}

Polynomial remainder(const Polynomial& f, const std::vector<Polynomial>& divisors,
                     const MonomialOrder& order) {
  return divide(f, divisors, order).second;
}

namespace {

ExponentVector exp_lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
  Term lf = f.initial_term(order);
  Term lg = g.initial_term(order);
  ExponentVector l = exp_lcm(lf.exponent, lg.exponent);
  Polynomial mf = Polynomial::monomial(f.vars(), exp_sub(l, lf.exponent),
                                       Rational(1) / lf.coefficient);
  Polynomial mg = Polynomial::monomial(g.vars(), exp_sub(l, lg.exponent),
                                       Rational(1) / lg.coefficient);
  return mf * f - mg * g;
}

GroebnerBasis reduce_basis(std::vector<Polynomial> basis,
                           const MonomialOrder& order) {
  basis.erase(std::remove_if(basis.begin(), basis.end(),
                             [](const Polynomial& p) { return p.is_zero(); }),
              basis.end());
  // Minimalize: drop elements whose lead is divisible by another's lead.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    ExponentVector li = basis[i].initial_exponent(order);
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      ExponentVector lj = basis[j].initial_exponent(order);
      if (lj == li ? j < i : exp_divides(lj, li)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i].monic(order));
  }
  // Tail-reduce each element modulo the others.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    reduced.push_back(others.empty()
                          ? minimal[i]
                          : remainder(minimal[i], others, order).monic(order));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&order](const Polynomial& a, const Polynomial& b) {
              return order_less(order, a.initial_exponent(order),
                                b.initial_exponent(order));
            });
  return {order, std::move(reduced)};
}

namespace {

// Full reduction against the current basis using cached leading terms.
Polynomial reduce_with_leads(const Polynomial& f,
                             const std::vector<Polynomial>& basis,
                             const std::vector<Term>& leads,
                             const std::vector<long long>& lead_degrees,
                             const MonomialOrder& order) {
  Polynomial r(f.vars());
  Polynomial p = f;
  while (!p.is_zero()) {
    Term lt = p.initial_term(order);
    long long lt_deg = total_degree(lt.exponent);
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (lead_degrees[i] > lt_deg) continue;
      if (!exp_divides(leads[i].exponent, lt.exponent)) continue;
      Polynomial m = Polynomial::monomial(
          f.vars(), exp_sub(lt.exponent, leads[i].exponent),
          lt.coefficient / leads[i].coefficient);
      p = p - m * basis[i];
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial m = Polynomial::monomial(f.vars(), lt.exponent, lt.coefficient);
      r = r + m;
      p = p - m;
    }
  }
  return r;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         std::size_t max_pairs) {
  std::vector<Polynomial> basis;
  for (const auto& g : ideal.generators)
    if (!g.is_zero()) basis.push_back(g.monic(order));
  if (basis.empty()) return {order, {}};

  std::vector<Term> leads;
  std::vector<long long> lead_degrees;
  for (const auto& g : basis) {
    leads.push_back(g.initial_term(order));
    lead_degrees.push_back(total_degree(leads.back().exponent));
  }

  struct Pair {
    ExponentVector lcm;
    long long lcm_degree;
    std::size_t i, j;
  };
  // Normal strategy: smallest lcm first, index tiebreak for determinism.
  auto pair_less = [&order](const Pair& a, const Pair& b) {
    auto c = compare(order, a.lcm, b.lcm);
    if (c != Ordering::Equal) return c == Ordering::Less;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::multiset<Pair, decltype(pair_less)> queue(pair_less);

  // Gebauer-Moller update: prune the candidate pairs of the new element k
  // and drop old pairs whose lcm factors through the new lead.
  auto push_pairs_for = [&](std::size_t k) {
    const ExponentVector& lk = leads[k].exponent;
    const long long dk = lead_degrees[k];
    std::vector<Pair> cand;
    cand.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      ExponentVector l = exp_lcm(leads[i].exponent, lk);
      long long d = total_degree(l);
      cand.push_back({std::move(l), d, i, k});
    }
    // drop old pairs (i,j) with lk strictly inside lcm(i,j)
    for (auto it = queue.begin(); it != queue.end();) {
      if (dk <= it->lcm_degree && exp_divides(lk, it->lcm) &&
          cand[it->i].lcm != it->lcm && cand[it->j].lcm != it->lcm)
        it = queue.erase(it);
      else
        ++it;
    }
    // among the candidates keep only minimal lcms, one per lcm value
    std::vector<char> keep(cand.size(), 1);
    for (std::size_t a = 0; a < cand.size(); ++a) {
      for (std::size_t b = 0; b < cand.size() && keep[a]; ++b) {
        if (a == b || cand[b].lcm_degree > cand[a].lcm_degree) continue;
        if (cand[b].lcm == cand[a].lcm ? b < a
                                       : exp_divides(cand[b].lcm, cand[a].lcm))
          keep[a] = 0;
      }
    }
    for (std::size_t a = 0; a < cand.size(); ++a) {
      if (!keep[a]) continue;
      if (coprime(leads[cand[a].i].exponent, lk)) continue;  // first criterion
      queue.insert(cand[a]);
    }
  };
  for (std::size_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

  std::size_t processed = 0;
  while (!queue.empty()) {
    if (++processed > max_pairs)
      throw ResourceLimitError("Buchberger pair queue exceeded cap");
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    Polynomial s = s_polynomial(basis[p.i], basis[p.j], order);
    if (s.is_zero()) continue;
    Polynomial r = reduce_with_leads(s, basis, leads, lead_degrees, order);
    if (r.is_zero()) continue;
    basis.push_back(r.monic(order));
    leads.push_back(basis.back().initial_term(order));
    lead_degrees.push_back(total_degree(leads.back().exponent));
    push_pairs_for(basis.size() - 1);
  }
  return reduce_basis(std::move(basis), order);
}

}  // namespace sagbilab
