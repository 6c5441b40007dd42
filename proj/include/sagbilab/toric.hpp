#pragma once

#include <vector>

#include "sagbilab/groebner.hpp"
#include "sagbilab/polynomial.hpp"

namespace sagbilab {

// Integer matrix given by its columns u_1, ..., u_s in (Z>=0)^n.
struct ExponentMatrix {
  std::size_t n = 0;
  std::vector<ExponentVector> columns;

  static ExponentMatrix from_columns(std::vector<ExponentVector> cols);
};

// Generators of the toric ideal I_A, the kernel of X_i -> x^{u_i}. All
// generators are pure-difference binomials X^alpha - X^beta with disjoint
// support, larger side first, sorted by ascending leading exponent.
struct BinomialIdeal {
  std::vector<std::string> vars;  // X0, X1, ..., X{s-1}
  std::vector<Polynomial> generators;
};

BinomialIdeal toric_ideal(const ExponentMatrix& a,
                          std::size_t max_pairs = default_pair_cap());

// Basis of the integer kernel {v in Z^s | Av = 0}, primitive vectors.
// Independent of toric_ideal; used as its testing oracle.
std::vector<std::vector<std::int64_t>> kernel_lattice(const ExponentMatrix& a);

}  // namespace sagbilab
