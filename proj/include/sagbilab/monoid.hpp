#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sagbilab/polynomial.hpp"
#include "sagbilab/rational.hpp"

namespace sagbilab {

// Submonoid of (Z>=0)^n given by finite generators, arithmetic-progression
// families {base + m*period}, and/or a recognized closed-form stream.
struct AffineMonoid {
  struct Family {
    ExponentVector base;
    ExponentVector period;  // non-zero
  };
  enum class Stream { None, OneNSquared };  // {(1, n^2) | n >= 0}

  std::size_t dim = 2;
  std::vector<ExponentVector> finite_gens;
  std::vector<Family> families;
  Stream stream = Stream::None;

  static AffineMonoid from_generators(std::size_t dim,
                                      std::vector<ExponentVector> gens);
  static AffineMonoid one_n_squared();

  // Generators with all coordinates <= bound (families and streams truncated).
  std::vector<ExponentVector> generators_in_box(std::int64_t bound) const;
  // The full monoid intersected with the box [0, bound]^n. Sums are taken
  // over generators inside the box; for box-monotone generators (every
  // generator coordinate-wise nonzero toward the box) this is exact.
  std::vector<ExponentVector> elements_in_box(std::int64_t bound) const;
};

// 2-D rational cone spanned by two primitive rays, with inward facet normals.
struct Cone2D {
  ExponentVector ray1, ray2;          // primitive; equal when degenerate
  std::vector<std::int64_t> normal1;  // vanishes on ray1, >= 0 on the cone
  std::vector<std::int64_t> normal2;  // vanishes on ray2, >= 0 on the cone
  bool degenerate = false;            // single ray (or the origin alone)
};

struct MonoidMembership {
  bool member = false;
  // Pairs (generator, multiplicity) summing to the queried point.
  std::vector<std::pair<ExponentVector, std::int64_t>> decomposition;
};

MonoidMembership membership(const AffineMonoid& m, const ExponentVector& p,
                            std::int64_t search_bound);

// Irreducible elements of m with all coordinates <= box_bound.
std::vector<ExponentVector> irreducibles(const AffineMonoid& m,
                                         std::int64_t box_bound);

Cone2D cone_of(const std::vector<ExponentVector>& points);

bool interior_contains(const Cone2D& c, const ExponentVector& p);

// Lemma-shaped monoid: finite generator v1 plus the families {u_i + m*v2}.
// Requires v1, v2 linearly independent and every u_i interior to cone(v1,v2).
AffineMonoid construct_module_monoid(const ExponentVector& v1,
                                     const ExponentVector& v2,
                                     const std::vector<ExponentVector>& us);

enum class FinitenessVerdict { Yes, No, Unknown };

struct FinitenessResult {
  FinitenessVerdict verdict;
  // For stream probes: the strictly increasing extreme-slope sequence seen.
  std::vector<Rational> slope_evidence;
};

FinitenessResult is_finitely_generated(const AffineMonoid& m,
                                       std::int64_t probe_bound);

// Finite generating set of the algebra R = k[x^{v1}+x^{v2}, x^u : u in L]:
// per u_i the minimal l_i with l_i u_i = a_i v1 + b_i v2 and the generator
// list {x^{v1}+x^{v2}} u {x^{u_i + k v2} : 0 <= k <= a_i + b_i - 1}.
struct ModuleGeneratorData {
  std::int64_t l = 0, a = 0, b = 0;
};

struct FiniteGenerators {
  std::vector<ModuleGeneratorData> per_u;
  std::vector<std::string> vars;          // "x", "y"
  std::vector<Polynomial> generators;
};

FiniteGenerators thm34_finite_generators(const ExponentVector& v1,
                                         const ExponentVector& v2,
                                         const std::vector<ExponentVector>& us);

// The (a+1)x(a+1) binomial-coefficient change-of-basis matrix between the
// monomial basis m_p and the polynomials f_k, its determinant, and the
// coefficient vector expressing m_a in f_0..f_a.
struct BinomialMatrixData {
  std::vector<std::vector<Rational>> matrix;
  Rational determinant;
  bool regular = false;
  std::vector<Rational> solve;  // m_a = sum solve[k] * f_k
};

BinomialMatrixData thm34_matrix(std::int64_t a);

}  // namespace sagbilab
