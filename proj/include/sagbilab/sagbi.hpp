#pragma once

#include <optional>
#include <vector>

#include "sagbilab/groebner.hpp"
#include "sagbilab/polynomial.hpp"
#include "sagbilab/toric.hpp"

namespace sagbilab {

// Algebra generators F = {f_1, ..., f_s}, stored monic and non-zero.
struct GeneratorSet {
  std::vector<std::string> vars;
  MonomialOrder order;
  std::vector<Polynomial> gens;

  static GeneratorSet make(std::vector<std::string> vars, MonomialOrder order,
                           std::vector<Polynomial> gens);
  std::vector<ExponentVector> initial_exponents() const;
};

// One summand c * f_1^{i_1} ... f_s^{i_s} of the algebra part q.
struct AlgebraTerm {
  Rational coefficient;
  std::vector<std::int64_t> multiplicities;
};

// f = q + r + c. Every term moved into r failed the initial-representation
// test at the moment of its removal; c is the residual constant.
struct SubductionResult {
  Polynomial q;
  Polynomial r;
  Rational c;
  std::vector<AlgebraTerm> q_expression;
};

// Lexicographically smallest (i_1, ..., i_s) with sum i_j * initials[j] = e,
// or nullopt when no non-negative integer solution exists.
std::optional<std::vector<std::int64_t>> find_initial_representation(
    const ExponentVector& e, const std::vector<ExponentVector>& initials);

SubductionResult subduct(const Polynomial& f, const GeneratorSet& F);

struct SagbiCheck {
  bool is_sagbi = false;
  std::size_t relations_checked = 0;     // certificate when is_sagbi
  std::optional<Polynomial> witness_binomial;   // relation-ring binomial
  std::optional<Polynomial> witness_remainder;  // its subduction remainder
};

SagbiCheck sagbi_check(const GeneratorSet& F,
                       std::size_t max_pairs = default_pair_cap());

enum class SagbiStatus { Finite, Truncated };

struct SagbiReport {
  SagbiStatus status = SagbiStatus::Truncated;
  GeneratorSet basis;  // sorted by ascending initial exponent, autoreduced
  long long max_degree_reached = 0;
  int rounds = 0;
  std::optional<SagbiCheck> certificate;  // present when Finite
};

// Degree-truncated completion: subduce all tete-a-tetes each round in
// ascending order of their initial exponents, adjoin monic non-constant
// remainders of total degree <= max_degree, repeat to a fixpoint.
SagbiReport sagbi_construct(const GeneratorSet& F0, long long max_degree,
                            std::size_t max_pairs = default_pair_cap());

// Reduced form: drop generators with representable initials, make monic,
// subduce tails against the other generators, to a fixpoint.
GeneratorSet autoreduce(const GeneratorSet& F);

// All elements of the monoid generated by the basis initials with every
// coordinate <= bound. Partial when the report is Truncated.
std::vector<ExponentVector> initial_algebra_monoid(const SagbiReport& report,
                                                   std::int64_t coordinate_bound);

}  // namespace sagbilab
