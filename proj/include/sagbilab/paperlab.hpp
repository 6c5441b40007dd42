#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sagbilab/monoid.hpp"
#include "sagbilab/sagbi.hpp"

namespace sagbilab {

// Catalogued reproduction targets. Parameters default to the documented
// desk-scale instances; see golden.cpp for the expected artifacts.
struct ExampleId {
  std::string name;  // P3.1, P3.2, E3.5, E3.6, E3.7, T3.4, T4.1, E5.1..E5.4
  std::optional<std::int64_t> s;         // E3.6
  std::optional<std::int64_t> a, b;      // E3.7
  std::optional<std::int64_t> m, k_max;  // T4.1
  std::optional<std::int64_t> max_degree;
};

struct ReproductionReport {
  std::string example;
  bool match = false;
  std::vector<std::string> expected;
  std::vector<std::string> computed;
  std::vector<std::string> diff;  // human-readable mismatch notes
  double seconds = 0.0;

  std::string to_json() const;
  std::string to_text() const;
};

ReproductionReport reproduce(const ExampleId& id);

// Full verification pipeline for the impossibility argument: the base-case
// expansion, the reduced lex Groebner basis, the odd/even induction
// identities up to k_max, the squares-mod-4 obstruction, the x -> x - a*y
// rewriting of the generators, vanishing of all toric relations, and the
// finite SAGBI check at a = 1.
ReproductionReport thm41_verify(std::int64_t m, std::int64_t k_max);

// Deterministic SVG lattice diagram: filled dots for monoid members,
// ring-marked dots for irreducibles, extreme rays drawn from the origin.
std::string plot_monoid_svg(const std::vector<ExponentVector>& members,
                            const std::vector<ExponentVector>& irreducible_points,
                            const std::vector<ExponentVector>& rays,
                            std::int64_t bound);

// Expected artifacts (see golden.cpp).
namespace golden {
std::vector<ExponentVector> e35_initials(std::int64_t max_degree);
std::vector<ExponentVector> e36_initials(std::int64_t s, std::int64_t max_degree);
std::vector<ExponentVector> e37_initials(std::int64_t a, std::int64_t b,
                                         std::int64_t max_degree);
std::vector<ExponentVector> e51_initials(std::int64_t max_degree);
std::vector<ExponentVector> e52_initials(std::int64_t max_degree);
std::vector<ExponentVector> e53_initials(std::int64_t max_degree);
std::vector<ExponentVector> e54_initials(std::int64_t max_degree);
std::vector<Polynomial> e54_flipped_finite_basis();
// Reduced lex GB printed for the relation ideal of the impossibility proof.
std::vector<Polynomial> thm41_groebner_basis();
std::vector<Polynomial> thm41_h_generators();
}  // namespace golden

}  // namespace sagbilab
