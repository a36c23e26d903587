#include "fthresh/parse.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fthresh {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

template <class Field>
class Parser {
 public:
  using P = Poly<Field>;

  Parser(std::string_view text, const RingPtr<Field>& ring) : s_(text), ring_(ring) {}

  P run() {
    skip_ws();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty expression");
    P result = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return result;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  P expr() {
    bool negate = false;
    if (char c = peek(); c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    P acc = term();
    if (negate) acc = -acc;
    for (;;) {
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      P rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  P term() {
    P acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        BigInt d = integer("integer divisor after '/'");
        auto dc = ring_->field.from_integer(d);
        if (ring_->field.is_zero(dc)) throw SyntaxError(at, "division by zero in the coefficient field");
        acc = acc.scaled(ring_->field.inv(dc));
      } else {
        break;
      }
    }
    return acc;
  }

  P factor() {
    P base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '-') {
        throw Error(ErrorCode::NegativeExponent,
                    "negative exponent at position " + std::to_string(pos_));
      }
      std::size_t at = pos_;
      BigInt e = integer("integer exponent after '^'");
      if (!e.fits_ulong_p()) throw SyntaxError(at, "exponent too large");
      base = poly_pow(base, e.get_ui());
    }
    return base;
  }

  P primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      P inner = expr();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (digit(c)) {
      BigInt n = integer("integer literal");
      if (ident_start(peek())) throw SyntaxError(pos_, "implicit multiplication is not allowed; use '*'");
      return P::constant(ring_, ring_->field.from_integer(n));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& vars = ring_->vars;
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it == vars.end()) {
        throw Error(ErrorCode::UnknownVariable,
                    "'" + name + "' at position " + std::to_string(start) + " is not a ring variable");
      }
      if (char n = peek(); ident_start(n) || digit(n) || n == '(') {
        throw SyntaxError(pos_, "implicit multiplication is not allowed; use '*'");
      }
      return P::variable(ring_, static_cast<std::size_t>(it - vars.begin()));
    }
    if (c == '\0') throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  BigInt integer(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && digit(s_[pos_])) ++pos_;
    if (start == pos_) throw SyntaxError(start, std::string("expected ") + what);
    return BigInt(std::string(s_.substr(start, pos_ - start)), 10);
  }

  std::string_view s_;
  const RingPtr<Field>& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

template <class Field>
Poly<Field> parse_poly(std::string_view text, const RingPtr<Field>& ring) {
  return Parser<Field>(text, ring).run();
}

template Poly<PrimeField> parse_poly(std::string_view, const RingPtr<PrimeField>&);
template Poly<RationalField> parse_poly(std::string_view, const RingPtr<RationalField>&);

FpPoly parse_fp(std::string_view text, const std::vector<std::string>& vars, Prime p) {
  return parse_poly(text, make_ring(PrimeField(p), vars));
}

QPoly parse_q(std::string_view text, const std::vector<std::string>& vars) {
  return parse_poly(text, make_ring(RationalField{}, vars));
}

AnyPoly parse_poly(std::string_view text, const std::vector<std::string>& vars, Domain domain) {
  if (domain.kind == DomainKind::PrimeField) return parse_fp(text, vars, Prime(domain.p));
  return parse_q(text, vars);
}

std::vector<std::string> scan_variables(std::string_view text) {
  std::set<std::string> names;
  for (std::size_t i = 0; i < text.size();) {
    if (ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      names.emplace(text.substr(i, j - i));
      i = j;
    } else if (digit(text[i])) {
      while (i < text.size() && ident_char(text[i])) ++i;
    } else {
      ++i;
    }
  }
  return {names.begin(), names.end()};
}

}  // namespace fthresh
