#include "sagbilab/sagbi.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <utility>

#include "sagbilab/error.hpp"

namespace sagbilab {

GeneratorSet GeneratorSet::make(std::vector<std::string> vars,
                                MonomialOrder order,
                                std::vector<Polynomial> gens) {
  GeneratorSet F{std::move(vars), std::move(order), {}};
  F.gens.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) throw PreconditionError("zero generator");
    if (g.vars() != F.vars)
      throw RingMismatchError("generator from a different ring");
    F.gens.push_back(g.monic(F.order));
  }
  return F;
}

std::vector<ExponentVector> GeneratorSet::initial_exponents() const {
  std::vector<ExponentVector> e;
  e.reserve(gens.size());
  for (const auto& g : gens) e.push_back(g.initial_exponent(order));
  return e;
}

namespace {

using FailedStates = std::set<std::pair<std::size_t, ExponentVector>>;

bool rep_dfs(const ExponentVector& remaining,
             const std::vector<ExponentVector>& initials, std::size_t idx,
             std::vector<std::int64_t>& picks, FailedStates& failed) {
  if (idx == initials.size()) {
    for (auto v : remaining)
      if (v != 0) return false;
    return true;
  }
  if (failed.count({idx, remaining})) return false;
  const ExponentVector& u = initials[idx];
  std::int64_t cap = 0;
  bool bounded = false;
  for (std::size_t c = 0; c < u.size(); ++c) {
    if (u[c] > 0) {
      std::int64_t q = remaining[c] / u[c];
      cap = bounded ? std::min(cap, q) : q;
      bounded = true;
    }
  }
  if (!bounded) cap = 0;  // constant initial contributes nothing
  // Ascending multiplicity first makes the first hit lexicographically least.
  ExponentVector rem = remaining;
  for (std::int64_t i = 0; i <= cap; ++i) {
    picks.push_back(i);
    if (rep_dfs(rem, initials, idx + 1, picks, failed)) return true;
    picks.pop_back();
    if (i < cap)
      for (std::size_t c = 0; c < u.size(); ++c) rem[c] -= u[c];
  }
  failed.emplace(idx, remaining);
  return false;
}

}  // namespace

std::optional<std::vector<std::int64_t>> find_initial_representation(
    const ExponentVector& e, const std::vector<ExponentVector>& initials) {
  for (const auto& u : initials)
    if (u.size() != e.size())
      throw DimensionError("initial exponent has wrong length");
  std::vector<std::int64_t> picks;
  picks.reserve(initials.size());
  FailedStates failed;
  if (rep_dfs(e, initials, 0, picks, failed)) return picks;
  return std::nullopt;
}

SubductionResult subduct(const Polynomial& f, const GeneratorSet& F) {
  if (f.vars() != F.vars) throw RingMismatchError("polynomial from a different ring");
  const MonomialOrder& ord = F.order;
  std::vector<ExponentVector> initials = F.initial_exponents();

  SubductionResult res{Polynomial(F.vars), Polynomial(F.vars), Rational(0), {}};
  Polynomial p = f;
  bool have_prev = false;
  ExponentVector prev;
  while (!p.is_constant()) {
    Term lt = p.initial_term(ord);
    // The loop variable strictly descends in the monomial order.
    assert(!have_prev || order_less(ord, lt.exponent, prev));
    prev = lt.exponent;
    have_prev = true;
    auto rep = find_initial_representation(lt.exponent, initials);
    if (rep) {
      // Generators are monic, so the product's leading coefficient is 1 and
      // the matching scalar is the leading coefficient of p itself.
      Polynomial prod = Polynomial::constant(F.vars, lt.coefficient);
      for (std::size_t j = 0; j < F.gens.size(); ++j)
        if ((*rep)[j] > 0) prod = prod * F.gens[j].pow((*rep)[j]);
      res.q = res.q + prod;
      res.q_expression.push_back({lt.coefficient, *rep});
      p = p - prod;
    } else {
      Polynomial m = Polynomial::monomial(F.vars, lt.exponent, lt.coefficient);
      res.r = res.r + m;
      p = p - m;
    }
  }
  res.c = p.constant_term();
  return res;
}

namespace {

// Evaluate a relation-ring polynomial at the generators.
Polynomial evaluate_relation(const Polynomial& rel, const GeneratorSet& F) {
  std::map<std::string, Polynomial> images;
  for (std::size_t i = 0; i < F.gens.size(); ++i)
    images.emplace("X" + std::to_string(i), F.gens[i]);
  return rel.substitute(images);
}

}  // namespace

SagbiCheck sagbi_check(const GeneratorSet& F, std::size_t max_pairs) {
  BinomialIdeal rels =
      toric_ideal(ExponentMatrix::from_columns(F.initial_exponents()), max_pairs);
  SagbiCheck result;
  result.relations_checked = rels.generators.size();
  for (const auto& rel : rels.generators) {
    Polynomial tete = evaluate_relation(rel, F);
    if (tete.is_zero()) continue;
    SubductionResult s = subduct(tete, F);
    if (!s.r.is_zero()) {
      result.is_sagbi = false;
      result.witness_binomial = rel;
      result.witness_remainder = s.r;
      return result;
    }
  }
  result.is_sagbi = true;
  return result;
}

SagbiReport sagbi_construct(const GeneratorSet& F0, long long max_degree,
                            std::size_t max_pairs) {
  for (const auto& g : F0.gens)
    if (g.degree() > max_degree)
      throw PreconditionError("max_degree below a generator's degree");

  GeneratorSet F = F0;
  const MonomialOrder& ord = F.order;
  SagbiReport report;
  bool truncated = false;
  for (;;) {
    ++report.rounds;
    BinomialIdeal rels =
        toric_ideal(ExponentMatrix::from_columns(F.initial_exponents()), max_pairs);
    std::vector<Polynomial> tetes;
    for (const auto& rel : rels.generators) {
      Polynomial t = evaluate_relation(rel, F);
      if (!t.is_zero()) tetes.push_back(std::move(t));
    }
    std::sort(tetes.begin(), tetes.end(),
              [&ord](const Polynomial& a, const Polynomial& b) {
                return order_less(ord, a.initial_exponent(ord),
                                  b.initial_exponent(ord));
              });
    bool adjoined = false;
    bool over_bound = false;
    for (const auto& t : tetes) {
      SubductionResult s = subduct(t, F);
      if (s.r.is_zero()) continue;
      if (s.r.degree() > max_degree) {
        over_bound = true;
      } else {
        F.gens.push_back(s.r.monic(ord));
        adjoined = true;
      }
    }
    if (!adjoined) {
      truncated = over_bound;
      break;
    }
  }

  F = autoreduce(F);
  std::sort(F.gens.begin(), F.gens.end(),
            [&ord](const Polynomial& a, const Polynomial& b) {
              return order_less(ord, a.initial_exponent(ord),
                                b.initial_exponent(ord));
            });
  report.status = truncated ? SagbiStatus::Truncated : SagbiStatus::Finite;
  report.basis = F;
  report.max_degree_reached = max_degree;
  if (!truncated) report.certificate = sagbi_check(F, max_pairs);
  return report;
}

GeneratorSet autoreduce(const GeneratorSet& F) {
  const MonomialOrder& ord = F.order;
  std::vector<Polynomial> gens;
  for (const auto& g : F.gens) gens.push_back(g.monic(ord));

  // Drop generators whose initial exponent the others already represent,
  // largest initial first so a power drops before its root.
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> idx(gens.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      return order_less(ord, gens[b].initial_exponent(ord),
                        gens[a].initial_exponent(ord));
    });
    for (std::size_t k : idx) {
      std::vector<ExponentVector> others;
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != k) others.push_back(gens[j].initial_exponent(ord));
      if (others.empty()) continue;
      if (find_initial_representation(gens[k].initial_exponent(ord), others)) {
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
    }
  }

  // Tail reduction: replace g by g - q where q subduces the tail.
  changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      GeneratorSet others{F.vars, ord, {}};
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (j != k) others.gens.push_back(gens[j]);
      if (others.gens.empty()) continue;
      Term lt = gens[k].initial_term(ord);
      Polynomial tail =
          gens[k] - Polynomial::monomial(F.vars, lt.exponent, lt.coefficient);
      if (tail.is_zero()) continue;
      SubductionResult s = subduct(tail, others);
      if (!s.q.is_zero()) {
        gens[k] = gens[k] - s.q;
        changed = true;
      }
    }
  }

  GeneratorSet out{F.vars, ord, std::move(gens)};
  return out;
}

std::vector<ExponentVector> initial_algebra_monoid(const SagbiReport& report,
                                                   std::int64_t coordinate_bound) {
  const GeneratorSet& F = report.basis;
  std::set<ExponentVector> members;
  std::size_t n = F.vars.size();
  members.insert(ExponentVector(n, 0));
  std::vector<ExponentVector> initials = F.initial_exponents();
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ExponentVector> snapshot(members.begin(), members.end());
    for (const auto& m : snapshot) {
      for (const auto& u : initials) {
        ExponentVector next = exp_add(m, u);
        if (*std::max_element(next.begin(), next.end()) > coordinate_bound)
          continue;
        if (members.insert(next).second) grew = true;
      }
    }
  }
  return {members.begin(), members.end()};
}

}  // namespace sagbilab
