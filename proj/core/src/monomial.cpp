#include "gorenlab/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace gorenlab {

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int x : e_) {
    if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
  }
  degree_ = std::accumulate(e_.begin(), e_.end(), 0);
}

Monomial Monomial::one(std::size_t nvars) {
  return Monomial(std::vector<int>(nvars, 0));
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index) {
  std::vector<int> e(nvars, 0);
  e.at(index) = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (nvars() != o.nvars()) throw std::invalid_argument("Monomial: variable count mismatch");
  std::vector<int> e(e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& b) const {
  if (nvars() != b.nvars()) return false;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (e_[i] > b.e_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& b, const Monomial& a) {
  std::vector<int> e(b.e_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= a.e_[i];
  return Monomial(std::move(e));
}

namespace {

void enumerate(std::size_t var, int remaining, std::vector<int>& current,
               std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    current[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, int k) {
  if (k < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
  if (nvars == 0) {
    return k == 0 ? std::vector<Monomial>{Monomial()} : std::vector<Monomial>{};
  }
  std::vector<Monomial> out;
  std::vector<int> current(nvars, 0);
  enumerate(0, k, current, out);
  return out;
}

}  // namespace gorenlab
