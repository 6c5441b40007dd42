#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sagbilab/polynomial.hpp"

namespace sagbilab {

struct Ideal {
  std::vector<std::string> vars;
  std::vector<Polynomial> generators;  // all non-zero, same ring
};

// Reduced Groebner basis: monic elements, no term of any element divisible
// by the leading exponent of another, sorted by ascending leading exponent.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
};

std::size_t default_pair_cap();  // SAGBI_MAX_PAIRS, default 100000

// Multivariate division: f = sum q_i g_i + r with no term of r divisible by
// any leading exponent of G. Ties between divisors go to the first in list
// order.
std::pair<std::vector<Polynomial>, Polynomial> divide(
    const Polynomial& f, const std::vector<Polynomial>& divisors,
    const MonomialOrder& order);

Polynomial remainder(const Polynomial& f, const std::vector<Polynomial>& divisors,
                     const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order,
                         std::size_t max_pairs = default_pair_cap());

GroebnerBasis reduce_basis(std::vector<Polynomial> basis,
                           const MonomialOrder& order);

}  // namespace sagbilab
