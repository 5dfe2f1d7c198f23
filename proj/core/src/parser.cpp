#include <cctype>
#include <string>

#include "gorenlab/polynomial.hpp"

namespace gorenlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Ctx ctx, Side side)
      : text_(text), ctx_(std::move(ctx)), side_(side) {}

  Polynomial run() {
    Polynomial result(ctx_, side_);
    skip_ws();
    int sign = parse_optional_sign();
    result = result + parse_term(sign);
    skip_ws();
    while (!at_end()) {
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      result = result + parse_term(c == '-' ? -1 : 1);
      skip_ws();
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  int parse_optional_sign() {
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      int s = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
      return s;
    }
    return 1;
  }

  // term := coeff ('*' factor)* | factor ('*' factor)*
  Polynomial parse_term(int sign) {
    if (at_end()) fail("expected a term");
    Rational coeff(sign);
    Monomial mono = Monomial::one(ctx_->nvars());
    bool saw_anything = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= parse_coeff();
      saw_anything = true;
    } else {
      mono = mono * parse_factor();
      saw_anything = true;
    }
    skip_ws();
    while (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      mono = mono * parse_factor();
      skip_ws();
    }
    if (!saw_anything) fail("empty term");
    return Polynomial::term(ctx_, side_, mono, coeff);
  }

  Rational parse_coeff() {
    mpz_class num = parse_integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t den_pos = pos_;
      mpz_class den = parse_integer();
      if (den <= 0) throw ParseError("denominator must be positive", den_pos);
      return Rational(num, den);
    }
    return Rational(num);
  }

  mpz_class parse_integer() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      ++pos_;
    }
    return mpz_class(digits);
  }

  Monomial parse_factor() {
    std::size_t var_pos = pos_;
    std::size_t index = parse_variable(var_pos);
    int exponent = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t exp_pos = pos_;
      mpz_class e = parse_integer();
      if (e <= 0 || !e.fits_sint_p()) throw ParseError("exponent must be a positive integer", exp_pos);
      exponent = static_cast<int>(e.get_si());
    }
    std::vector<int> exps(ctx_->nvars(), 0);
    exps[index] = exponent;
    return Monomial(std::move(exps));
  }

  std::size_t parse_variable(std::size_t var_pos) {
    if (at_end()) fail("expected a variable");
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_') {
      fail("expected a variable");
    }
    std::string name;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      name += peek();
      ++pos_;
    }
    // Longest alphanumeric run first, then back off so that declared names
    // like "U1" win over "U" while single-letter contexts still parse "UV"
    // as an error rather than silently splitting it.
    for (std::string probe = name; !probe.empty(); probe.pop_back()) {
      if (auto idx = ctx_->index_of(probe, side_)) {
        pos_ = var_pos + probe.size();
        return *idx;
      }
      if (ctx_->index_of(probe, side_ == Side::form ? Side::op : Side::form)) {
        throw ParseError("variable '" + probe + "' belongs to the other side", var_pos);
      }
    }
    throw ParseError("unknown variable '" + name + "'", var_pos);
  }

  std::string_view text_;
  Ctx ctx_;
  Side side_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, Ctx ctx, Side side) {
  if (!ctx) throw std::invalid_argument("parse_poly: null context");
  return Parser(text, std::move(ctx), side).run();
}

}  // namespace gorenlab
