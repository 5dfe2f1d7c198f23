#ifndef GORENLAB_POLYNOMIAL_HPP
#define GORENLAB_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gorenlab/monomial.hpp"
#include "gorenlab/rational.hpp"
#include "gorenlab/variable_context.hpp"

namespace gorenlab {

/*
 * Sparse multivariate polynomial with exact rational coefficients, tied to one
 * side of a VariableContext. Zero coefficients are never stored; terms are
 * kept in TermOrder, which fixes printing and coefficient-vector layouts.
 * Values are immutable in practice: all operations return new polynomials.
 */
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermOrder>;

  Polynomial(Ctx ctx, Side side);

  static Polynomial zero(Ctx ctx, Side side) { return Polynomial(ctx, side); }
  static Polynomial constant(Ctx ctx, Side side, const Rational& c);
  static Polynomial variable(Ctx ctx, Side side, std::size_t index);
  static Polynomial term(Ctx ctx, Side side, Monomial m, const Rational& c);

  const Ctx& ctx() const { return ctx_; }
  Side side() const { return side_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // Largest total degree of a term; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Rational coeff(const Monomial& m) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial pow(unsigned e) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.side_ == b.side_ && a.ctx_->same_as(*b.ctx_) && a.terms_ == b.terms_;
  }

  // Adds c * m into this polynomial, erasing the term if it cancels.
  Polynomial& add_term(const Monomial& m, const Rational& c);

  Rational evaluate(std::span<const Rational> point) const;

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void require_compatible(const Polynomial& o) const;
  Ctx ctx_;
  Side side_;
  TermMap terms_;
};

/*
 * The apolarity action: applies the differential operator p to the form F.
 * For monomials, x^a acting on X^b gives prod_i b_i!/(b_i-a_i)! * X^(b-a)
 * when b >= a componentwise and 0 otherwise; the action extends bilinearly.
 */
Polynomial diff_apply(const Polynomial& p, const Polynomial& F);

// Monomial fast path of the same action.
Polynomial diff_apply(const Monomial& p, const Polynomial& F);

/*
 * Parser for the text form of polynomials:
 *   expr   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := coeff ('*' factor)* | factor ('*' factor)*
 *   factor := var ['^' posint]
 *   coeff  := integer ['/' posint]
 * Whitespace is insignificant; variables are the names declared by the
 * context for the requested side, and a name from the opposite side is
 * reported as such.
 */
struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t pos)
      : std::runtime_error(message + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
  std::size_t position;
};

Polynomial parse_poly(std::string_view text, Ctx ctx, Side side);

}  // namespace gorenlab

#endif  // GORENLAB_POLYNOMIAL_HPP
