#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sagbilab/order.hpp"
#include "sagbilab/rational.hpp"

namespace sagbilab {

struct Term {
  Rational coefficient;  // never zero
  ExponentVector exponent;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Canonical form: no zero coefficients; every exponent vector has the
// ring's length. The zero polynomial has an empty term map.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static Polynomial constant(std::vector<std::string> vars, const Rational& c);
  static Polynomial monomial(std::vector<std::string> vars, ExponentVector e,
                             const Rational& c = Rational(1));

  const std::vector<std::string>& vars() const { return vars_; }
  const std::map<ExponentVector, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // The coefficient at the zero exponent (0 if absent).
  Rational constant_term() const;
  std::size_t term_count() const { return terms_.size(); }
  // Max total degree over the support; -1 for the zero polynomial.
  long long degree() const;

  std::vector<ExponentVector> support() const;
  Term initial_term(const MonomialOrder& order) const;  // throws on zero
  ExponentVector initial_exponent(const MonomialOrder& order) const;

  // Common total degree of all terms, or nullopt if mixed. Zero polynomial
  // reports degree -1 (homogeneous of every degree).
  std::optional<long long> homogeneous_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial pow(std::int64_t k) const;
  Polynomial monic(const MonomialOrder& order) const;

  bool operator==(const Polynomial& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
  }

  // Ring homomorphism determined by variable -> polynomial. Every variable
  // occurring in this polynomial must be mapped; all images must share one
  // target ring.
  Polynomial substitute(const std::map<std::string, Polynomial>& images) const;

  void add_term(const ExponentVector& e, const Rational& c);  // accumulates

  std::string format() const;
  std::string format_json() const;

private:
  void check_ring(const Polynomial& o) const;
  std::vector<std::string> vars_;
  std::map<ExponentVector, Rational> terms_;
};

// Text grammar of the CLI (see README): signed sums of terms
// `coeff '*'? var ('^' nat)? ...`, coefficients `nat` or `nat/nat`.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars);
Polynomial parse_polynomial_json(const std::string& json_text);

}  // namespace sagbilab
