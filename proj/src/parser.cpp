#include <cctype>
#include <string>

#include "sagbilab/error.hpp"
#include "sagbilab/polynomial.hpp"

namespace sagbilab {

namespace {

// Recursive-descent parser for
//   poly    := ['-'] term (('+'|'-') term)*
//   term    := coeff | coeff '*'? factors | factors
//   factors := var ('^' nat)? ('*'? var ('^' nat)?)*
//   coeff   := nat | nat '/' nat
//   var     := letter (letter|digit|'_')*
// Whitespace is insignificant.
class Parser {
public:
  Parser(const std::string& text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial result(vars_);
    skip_ws();
    bool negative = accept('-');
    result = result + term(negative);
    skip_ws();
    while (pos_ < text_.size()) {
      bool neg;
      if (accept('+'))
        neg = false;
      else if (accept('-'))
        neg = true;
      else
        throw ParseError("expected '+' or '-'", pos_);
      result = result + term(neg);
      skip_ws();
    }
    return result;
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool peek_digit() {
    skip_ws();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  bool peek_letter() {
    skip_ws();
    return pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]));
  }

  std::string nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ParseError("expected a number", pos_);
    return text_.substr(start, pos_ - start);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (!peek_letter()) throw ParseError("expected a variable", pos_);
    ++pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
        ++pos_;
      else
        break;
    }
    return text_.substr(start, pos_ - start);
  }

  std::size_t var_index(const std::string& name, std::size_t at) {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return i;
    throw ParseError("unknown variable '" + name + "'", at);
  }

  Polynomial term(bool negative) {
    Rational coeff(1);
    bool saw_coeff = false;
    if (peek_digit()) {
      std::string num = nat();
      std::string den = accept('/') ? nat() : "1";
      coeff = rat(num + "/" + den);
      saw_coeff = true;
      accept('*');
    }
    ExponentVector e(vars_.size(), 0);
    bool saw_var = false;
    while (peek_letter()) {
      std::size_t at = pos_;
      std::string name = identifier();
      std::int64_t k = 1;
      if (accept('^')) k = std::stoll(nat());
      e[var_index(name, at)] += k;
      saw_var = true;
      accept('*');
    }
    if (!saw_coeff && !saw_var) throw ParseError("expected a term", pos_);
    if (negative) coeff = -coeff;
    return Polynomial::monomial(vars_, std::move(e), coeff);
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& vars) {
  return Parser(text, vars).parse();
}

}  // namespace sagbilab
