#include "sagbilab/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "sagbilab/error.hpp"

namespace sagbilab {

Polynomial Polynomial::constant(std::vector<std::string> vars,
                                const Rational& c) {
  Polynomial p(std::move(vars));
  if (c != 0) p.terms_[ExponentVector(p.vars_.size(), 0)] = c;
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, ExponentVector e,
                                const Rational& c) {
  Polynomial p(std::move(vars));
  if (e.size() != p.vars_.size())
    throw DimensionError("monomial exponent has wrong length");
  for (auto v : e)
    if (v < 0) throw PreconditionError("negative exponent in monomial");
  if (c != 0) p.terms_[std::move(e)] = c;
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational Polynomial::constant_term() const {
  auto it = terms_.find(ExponentVector(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

long long Polynomial::degree() const {
  long long d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

std::vector<ExponentVector> Polynomial::support() const {
  std::vector<ExponentVector> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

Term Polynomial::initial_term(const MonomialOrder& order) const {
  if (terms_.empty())
    throw ZeroPolynomialError("initial term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order_less(order, best->first, it->first)) best = it;
  return {best->second, best->first};
}

ExponentVector Polynomial::initial_exponent(const MonomialOrder& order) const {
  return initial_term(order).exponent;
}

std::optional<long long> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return -1;
  long long d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return std::nullopt;
  return d;
}

void Polynomial::check_ring(const Polynomial& o) const {
  if (vars_ != o.vars_) throw RingMismatchError("polynomials from different rings");
}

void Polynomial::add_term(const ExponentVector& e, const Rational& c) {
  if (e.size() != vars_.size())
    throw DimensionError("term exponent has wrong length");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_ring(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_ring(o);
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(Rational(-1)); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_ring(o);
  Polynomial r(vars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) r.add_term(exp_add(ea, eb), ca * cb);
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(vars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
  return r;
}

Polynomial Polynomial::pow(std::int64_t k) const {
  if (k < 0) throw PreconditionError("negative power");
  Polynomial r = Polynomial::constant(vars_, Rational(1));
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (terms_.empty()) return *this;
  return scaled(Rational(1) / initial_term(order).coefficient);
}

Polynomial Polynomial::substitute(
    const std::map<std::string, Polynomial>& images) const {
  if (images.empty()) throw PreconditionError("empty substitution map");
  const std::vector<std::string>& target = images.begin()->second.vars();
  for (const auto& [v, img] : images)
    if (img.vars() != target)
      throw RingMismatchError("substitution images in different rings");
  std::vector<const Polynomial*> image_of(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = images.find(vars_[i]);
    if (it != images.end()) image_of[i] = &it->second;
  }
  Polynomial result(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (e[i] == 0) continue;
      if (!image_of[i])
        throw PreconditionError("no image for variable " + vars_[i]);
      term = term * image_of[i]->pow(e[i]);
    }
    result = result + term;
  }
  return result;
}

namespace {

// Printing order: descending degree-then-lex, first variable strongest.
bool print_before(const ExponentVector& a, const ExponentVector& b) {
  return compare(MonomialOrder::grlex(), a, b) == Ordering::Greater;
}

void append_monomial(std::ostream& os, const std::vector<std::string>& vars,
                     const ExponentVector& e, const Rational& abs_coeff) {
  bool printed = false;
  if (abs_coeff != 1 || total_degree(e) == 0) {
    os << abs_coeff.get_str();
    printed = true;
  }
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (e[i] == 0) continue;
    if (printed) os << "*";
    os << vars[i];
    if (e[i] > 1) os << "^" << e[i];
    printed = true;
  }
}

}  // namespace

std::string Polynomial::format() const {
  if (terms_.empty()) return "0";
  std::vector<ExponentVector> order_of_print = support();
  std::sort(order_of_print.begin(), order_of_print.end(), print_before);
  std::ostringstream os;
  bool first = true;
  for (const auto& e : order_of_print) {
    const Rational& c = terms_.at(e);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    append_monomial(os, vars_, e, abs(c));
  }
  return os.str();
}

std::string Polynomial::format_json() const {
  nlohmann::json j;
  j["vars"] = vars_;
  j["terms"] = nlohmann::json::array();
  std::vector<ExponentVector> order_of_print = support();
  std::sort(order_of_print.begin(), order_of_print.end(), print_before);
  for (const auto& e : order_of_print)
    j["terms"].push_back({{"c", terms_.at(e).get_str()}, {"e", e}});
  return j.dump();
}

Polynomial parse_polynomial_json(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
  Polynomial p(vars);
  for (const auto& t : j.at("terms")) {
    ExponentVector e = t.at("e").get<ExponentVector>();
    p.add_term(e, rat(t.at("c").get<std::string>()));
  }
  return p;
}

}  // namespace sagbilab
