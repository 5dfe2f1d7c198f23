#ifndef GORENLAB_RATIONAL_HPP
#define GORENLAB_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace gorenlab {

/*
 * Exact rational scalar, always kept in lowest terms with a positive
 * denominator. Every quantity computed by this library (ranks, determinants,
 * evaluations at rational points) is invariant under field extension, so
 * working over the rationals realizes the characteristic-zero coefficient
 * field exactly; no algebraic closure and no floating point anywhere.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(int n) : v_(n) {}   // NOLINT
  explicit Rational(const mpz_class& n) : v_(n) {}
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  // Accepts "p" or "p/q" with an optional leading sign.
  static Rational parse(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational abs() const { return Rational(mpq_class(::abs(v_)), no_canon{}); }

  Rational operator-() const { return Rational(mpq_class(-v_), no_canon{}); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational pow(unsigned e) const {
    Rational r(1), base(*this);
    for (; e; e >>= 1) {
      if (e & 1u) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  // "p" for integers, "p/q" otherwise.
  std::string str() const {
    return is_integer() ? v_.get_num().get_str() : v_.get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  struct no_canon {};
  Rational(mpq_class v, no_canon) : v_(std::move(v)) {}
  mpq_class v_;  // invariant: canonical form
};

inline Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational::parse: empty string");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text));
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("Rational::parse: denominator must be positive");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational::parse: malformed rational '" + text + "'");
  }
}

}  // namespace gorenlab

#endif  // GORENLAB_RATIONAL_HPP
