#ifndef GORENLAB_MONOMIAL_HPP
#define GORENLAB_MONOMIAL_HPP

#include <cstddef>
#include <vector>

namespace gorenlab {

// Exponent vector over a fixed, ordered variable list.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(std::size_t nvars);
  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return e_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return e_[i]; }
  const std::vector<int>& exponents() const { return e_; }

  Monomial operator*(const Monomial& o) const;
  // Componentwise comparison; a divides b iff a[i] <= b[i] for all i.
  bool divides(const Monomial& b) const;
  // Requires divides(b) in the caller.
  static Monomial quotient(const Monomial& b, const Monomial& a);

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }

 private:
  std::vector<int> e_;
  int degree_ = 0;
};

/*
 * Canonical term order used everywhere a deterministic basis, matrix row, or
 * printing order is needed: higher total degree first, ties broken by
 * descending lexicographic comparison of exponent vectors (so within one
 * degree the first variable carries the highest power first).
 */
struct TermOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    const auto& ae = a.exponents();
    const auto& be = b.exponents();
    for (std::size_t i = 0; i < ae.size(); ++i) {
      if (ae[i] != be[i]) return ae[i] > be[i];
    }
    return false;
  }
};

// All monomials of total degree k in nvars variables, listed in TermOrder.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int k);

}  // namespace gorenlab

#endif  // GORENLAB_MONOMIAL_HPP
