#include <algorithm>

#include "sagbilab/paperlab.hpp"

// Expected artifacts for the reproduction harness, transcribed into code as
// closed-form families truncated at the requested degree bound.

namespace sagbilab::golden {

namespace {

std::vector<ExponentVector> sorted(std::vector<ExponentVector> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// {base + m*step : total degree <= max_degree}
void push_family(std::vector<ExponentVector>& out, ExponentVector base,
                 const ExponentVector& step, std::int64_t max_degree) {
  while (total_degree(base) <= max_degree) {
    out.push_back(base);
    base = exp_add(base, step);
  }
}

}  // namespace

std::vector<ExponentVector> e35_initials(std::int64_t max_degree) {
  std::vector<ExponentVector> out{{1, 0}};
  push_family(out, {1, 1}, {0, 1}, max_degree);
  return sorted(out);
}

std::vector<ExponentVector> e36_initials(std::int64_t s, std::int64_t max_degree) {
  std::vector<ExponentVector> out{{s, 0}};
  for (std::int64_t i = 0; i < s; ++i)
    push_family(out, {s + i, s - i}, {0, s}, max_degree);
  return sorted(out);
}

std::vector<ExponentVector> e37_initials(std::int64_t a, std::int64_t b,
                                         std::int64_t max_degree) {
  std::vector<ExponentVector> out{{1, 0}};
  push_family(out, {a, b}, {0, 1}, max_degree);
  return sorted(out);
}

std::vector<ExponentVector> e51_initials(std::int64_t max_degree) {
  // x+y, x^2y, x^2y^2, x^3y^3, then x^2y^m for m >= 4; x^2y^3 never appears.
  std::vector<ExponentVector> out{{1, 0}, {2, 1}, {2, 2}, {3, 3}};
  push_family(out, {2, 4}, {0, 1}, max_degree);
  return sorted(out);
}

std::vector<ExponentVector> e52_initials(std::int64_t max_degree) {
  // x^2+y^2, x^2y, x^2y^2, then even powers x^2y^{2m} only.
  std::vector<ExponentVector> out{{2, 0}, {2, 1}};
  push_family(out, {2, 2}, {0, 2}, max_degree);
  return sorted(out);
}

std::vector<ExponentVector> e53_initials(std::int64_t max_degree) {
  // x, then xy^m for every m; monomials and binomials alternate.
  std::vector<ExponentVector> out;
  push_family(out, {1, 0}, {0, 1}, max_degree);
  return sorted(out);
}

std::vector<ExponentVector> e54_initials(std::int64_t max_degree) {
  // Four sporadic points, then two arithmetic families with step (1,3).
  std::vector<ExponentVector> out{{2, 0}, {3, 0}, {2, 2}, {3, 3}};
  push_family(out, {5, 7}, {1, 3}, max_degree);
  push_family(out, {6, 8}, {1, 3}, max_degree);
  return sorted(out);
}

std::vector<Polynomial> e54_flipped_finite_basis() {
  std::vector<std::string> v{"x", "y"};
  auto p = [&v](const std::string& s) { return parse_polynomial(s, v); };
  return {p("x^2 + y^2"), p("x^3 + y^3"), p("x^2*y^2"), p("x^3*y^3")};
}

std::vector<Polynomial> thm41_h_generators() {
  std::vector<std::string> v{"X0", "X1", "X2"};
  auto p = [&v](const std::string& s) { return parse_polynomial(s, v); };
  return {
      p("X0*X1 - X0*X2 - 2*X1^2 + 3*X1*X2 - X2^2"),
      p("X0^3 - 3*X0^2*X1 + 4*X0*X1^2 - X0*X2^2 - 4*X1^3 + 4*X1^2*X2 - X1*X2^2"),
      p("X0^3*X2 - 3*X0^2*X1*X2 + 4*X0*X1^2*X2 - X0*X1*X2^2 - X1^4"),
  };
}

std::vector<Polynomial> thm41_groebner_basis() {
  std::vector<std::string> v{"X0", "X1", "X2"};
  auto p = [&v](const std::string& s) { return parse_polynomial(s, v); };
  return {
      p("X1^4 - 4*X1^3*X2 + 6*X1^2*X2^2 - 4*X1*X2^3 + X2^4"),
      p("X0*X1 - X0*X2 - 2*X1^2 + 3*X1*X2 - X2^2"),
      p("X0^3 - 3*X0^2*X2 + 3*X0*X2^2 - 8*X1^3 + 24*X1^2*X2 - 24*X1*X2^2 + 7*X2^3"),
  };
}

}  // namespace sagbilab::golden
