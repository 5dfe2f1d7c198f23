#include "gorenlab/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace gorenlab {

Polynomial::Polynomial(Ctx ctx, Side side) : ctx_(std::move(ctx)), side_(side) {
  if (!ctx_) throw std::invalid_argument("Polynomial: null context");
}

Polynomial Polynomial::constant(Ctx ctx, Side side, const Rational& c) {
  Polynomial p(std::move(ctx), side);
  p.add_term(Monomial::one(p.ctx_->nvars()), c);
  return p;
}

Polynomial Polynomial::variable(Ctx ctx, Side side, std::size_t index) {
  Polynomial p(std::move(ctx), side);
  p.add_term(Monomial::variable(p.ctx_->nvars(), index), Rational(1));
  return p;
}

Polynomial Polynomial::term(Ctx ctx, Side side, Monomial m, const Rational& c) {
  Polynomial p(std::move(ctx), side);
  if (m.nvars() != p.ctx_->nvars()) {
    throw std::invalid_argument("Polynomial::term: monomial has wrong variable count");
  }
  p.add_term(m, c);
  return p;
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.begin()->first.degree();  // TermOrder puts highest degree first
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  return terms_.rbegin()->first.degree() == d;
}

Rational Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (side_ != o.side_) throw std::invalid_argument("Polynomial: mixed sides");
  if (!ctx_->same_as(*o.ctx_)) throw std::invalid_argument("Polynomial: context mismatch");
}

Polynomial& Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_, side_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(*this);
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(o);
  Polynomial r(ctx_, side_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  Polynomial r(ctx_, side_);
  if (c.is_zero()) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ctx_, side_, Rational(1));
  Polynomial base(*this);
  for (; e; e >>= 1) {
    if (e & 1u) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ctx_->nvars()) {
    throw std::invalid_argument("Polynomial::evaluate: point length mismatch");
  }
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < point.size(); ++i) {
      if (m[i] > 0) v *= point[i].pow(static_cast<unsigned>(m[i]));
    }
    total += v;
  }
  return total;
}

namespace {

// prod_i b_i! / (b_i - a_i)!, the coefficient picked up by iterated
// differentiation; requires a.divides(b).
mpz_class falling_factorial(const Monomial& a, const Monomial& b) {
  mpz_class f(1);
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    for (int t = b[i]; t > b[i] - a[i]; --t) f *= t;
  }
  return f;
}

}  // namespace

Polynomial diff_apply(const Monomial& p, const Polynomial& F) {
  if (F.side() != Side::form) throw std::invalid_argument("diff_apply: F must be on the form side");
  Polynomial out(F.ctx(), Side::form);
  for (const auto& [b, c] : F.terms()) {
    if (p.divides(b)) {
      out.add_term(Monomial::quotient(b, p), c * Rational(falling_factorial(p, b)));
    }
  }
  return out;
}

Polynomial diff_apply(const Polynomial& p, const Polynomial& F) {
  if (p.side() != Side::op) throw std::invalid_argument("diff_apply: p must be on the operator side");
  if (F.side() != Side::form) throw std::invalid_argument("diff_apply: F must be on the form side");
  if (!p.ctx()->same_as(*F.ctx())) throw std::invalid_argument("diff_apply: context mismatch");
  Polynomial out(F.ctx(), Side::form);
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : F.terms()) {
      if (a.divides(b)) {
        out.add_term(Monomial::quotient(b, a), ca * cb * Rational(falling_factorial(a, b)));
      }
    }
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& names = ctx_->names(side_);
  for (const auto& [m, c] : terms_) {
    Rational coeff = c;
    if (first) {
      if (coeff.sign() < 0) {
        os << "-";
        coeff = -coeff;
      }
      first = false;
    } else {
      os << (coeff.sign() < 0 ? " - " : " + ");
      if (coeff.sign() < 0) coeff = -coeff;
    }
    bool printed_coeff = false;
    if (m.degree() == 0) {
      os << coeff.str();
      continue;
    }
    if (!coeff.is_one()) {
      os << coeff.str();
      printed_coeff = true;
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (printed_coeff || !first_var) os << "*";
      os << names[i];
      if (m[i] > 1) os << "^" << m[i];
      printed_coeff = true;
      first_var = false;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace gorenlab
