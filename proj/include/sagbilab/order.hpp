#pragma once

#include <cstdint>
#include <vector>

#include "sagbilab/error.hpp"

namespace sagbilab {

// Exponent vector u of a monomial x^u. Entries are machine integers with
// checked arithmetic; coordinates are always >= 0 for monomials, while
// signed entries appear transiently (lattice kernels, normal vectors).
using ExponentVector = std::vector<std::int64_t>;

long long total_degree(const ExponentVector& e);
ExponentVector exp_add(const ExponentVector& a, const ExponentVector& b);
// Throws ExponentOverflowError if any coordinate would go negative.
ExponentVector exp_sub(const ExponentVector& a, const ExponentVector& b);
ExponentVector exp_scale(const ExponentVector& a, std::int64_t k);

inline bool exp_divides(const ExponentVector& d, const ExponentVector& e) {
  if (d.size() != e.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > e[i]) return false;
  return true;
}

enum class OrderKind { Lex, GrLex, GrevLex, WeightThenLex, Block };

enum class Ordering { Less, Equal, Greater };

// Total multiplicative well-order on exponent vectors.
//
// `priority` is a permutation of variable indices, strongest variable first;
// empty means identity (variable 0 strongest). For Block, `elim_block` lists
// the indices of the elimination block; monomials are compared grevlex on the
// block first, then grevlex on the remaining variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  std::vector<int> priority;
  std::vector<std::int64_t> weights;  // WeightThenLex only, entries >= 0
  std::vector<int> elim_block;        // Block only

  static MonomialOrder lex() { return {OrderKind::Lex, {}, {}, {}}; }
  static MonomialOrder grlex() { return {OrderKind::GrLex, {}, {}, {}}; }
  static MonomialOrder grevlex() { return {OrderKind::GrevLex, {}, {}, {}}; }
  static MonomialOrder weight_then_lex(std::vector<std::int64_t> w) {
    return {OrderKind::WeightThenLex, {}, std::move(w), {}};
  }
  static MonomialOrder block_elim(std::vector<int> elim_vars) {
    return {OrderKind::Block, {}, {}, std::move(elim_vars)};
  }
};

Ordering compare(const MonomialOrder& order, const ExponentVector& a,
                 const ExponentVector& b);

inline bool order_less(const MonomialOrder& order, const ExponentVector& a,
                       const ExponentVector& b) {
  return compare(order, a, b) == Ordering::Less;
}

}  // namespace sagbilab
