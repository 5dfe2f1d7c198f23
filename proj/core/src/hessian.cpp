#include "gorenlab/hessian.hpp"

#include <stdexcept>
#include <unordered_map>

#include "gorenlab/rng.hpp"

namespace gorenlab {

namespace {

void require_order(const ApolarAlgebra& alg, int k) {
  if (k < 0 || k > alg.socle_degree() / 2) {
    throw std::invalid_argument("hessian: order must satisfy 0 <= k <= d/2");
  }
}

void require_point(const ApolarAlgebra& alg, std::span<const Rational> point) {
  if (point.size() != alg.ctx()->nvars()) {
    throw std::invalid_argument("hessian: point length must match the variable count");
  }
}

}  // namespace

HessianMatrix hessian_matrix(const ApolarAlgebra& alg, int k) {
  require_order(alg, k);
  HessianMatrix hm;
  hm.order = k;
  hm.basis = alg.graded_basis(k);
  std::size_t h = hm.basis.size();
  hm.entries.assign(h * h, Polynomial(alg.ctx(), Side::form));
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      Polynomial e = diff_apply(hm.basis[i] * hm.basis[j], alg.dual_generator());
      hm.entries[i * h + j] = e;
      if (j != i) hm.entries[j * h + i] = std::move(e);
    }
  }
  return hm;
}

HessianMatrix hessian_matrix(const Polynomial& F, int k) {
  return hessian_matrix(ApolarAlgebra(F), k);
}

Rational hessian_det_at(const ApolarAlgebra& alg, int k, std::span<const Rational> point) {
  require_point(alg, point);
  HessianMatrix hm = hessian_matrix(alg, k);
  std::size_t h = hm.size();
  QMatrix m(h, h);
  for (std::size_t i = 0; i < h; ++i) {
    for (std::size_t j = i; j < h; ++j) {
      Rational v = hm.at(i, j).evaluate(point);
      m(i, j) = v;
      if (j != i) m(j, i) = std::move(v);
    }
  }
  return m.det();
}

Rational hessian_det_at(const Polynomial& F, int k, std::span<const Rational> point) {
  return hessian_det_at(ApolarAlgebra(F), k, point);
}

namespace {

// Laplace expansion over column subsets; the minor for a mask of t active
// columns uses the last t rows, so each subproblem is keyed by the mask alone.
class SymbolicDet {
 public:
  explicit SymbolicDet(const HessianMatrix& hm) : hm_(hm), n_(hm.size()) {}

  Polynomial run() {
    if (n_ == 0) throw std::logic_error("SymbolicDet: empty matrix");
    return minor((1u << n_) - 1u);
  }

 private:
  Polynomial minor(std::uint32_t mask) {
    auto it = memo_.find(mask);
    if (it != memo_.end()) return it->second;
    std::size_t t = static_cast<std::size_t>(__builtin_popcount(mask));
    std::size_t row = n_ - t;
    Polynomial result(hm_.at(0, 0).ctx(), Side::form);
    int active_pos = 0;  // cofactor signs follow the position inside the minor
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(mask & (1u << j))) continue;
      const Polynomial& entry = hm_.at(row, j);
      if (!entry.is_zero()) {
        if (t == 1) {
          result = result + entry;
        } else {
          Polynomial sub = minor(mask & ~(1u << j));
          result = active_pos % 2 == 0 ? result + entry * sub : result - entry * sub;
        }
      }
      ++active_pos;
    }
    memo_.emplace(mask, result);
    return result;
  }

  const HessianMatrix& hm_;
  std::size_t n_;
  std::unordered_map<std::uint32_t, Polynomial> memo_;
};

}  // namespace

Polynomial hessian_poly(const ApolarAlgebra& alg, int k, std::size_t size_guard) {
  require_order(alg, k);
  std::size_t h = static_cast<std::size_t>(alg.hilbert_value(k));
  if (h > size_guard) {
    throw std::domain_error("hessian_poly: basis size " + std::to_string(h) +
                            " exceeds the symbolic guard " + std::to_string(size_guard) +
                            "; evaluate at points instead");
  }
  HessianMatrix hm = hessian_matrix(alg, k);
  return SymbolicDet(hm).run();
}

Polynomial hessian_poly(const Polynomial& F, int k, std::size_t size_guard) {
  return hessian_poly(ApolarAlgebra(F), k, size_guard);
}

ProbablyZero hessian_probably_zero(const ApolarAlgebra& alg, int k, int num_points,
                                   std::uint64_t seed, int bound) {
  require_order(alg, k);
  HessianMatrix hm = hessian_matrix(alg, k);
  std::size_t h = hm.size();
  Rng rng(seed);
  ProbablyZero out;
  out.probably_zero = true;
  for (int t = 0; t < num_points; ++t) {
    std::vector<Rational> point(alg.ctx()->nvars());
    for (auto& x : point) x = rng.coefficient(bound);
    out.points.push_back(point);
    QMatrix m(h, h);
    for (std::size_t i = 0; i < h; ++i) {
      for (std::size_t j = i; j < h; ++j) {
        Rational v = hm.at(i, j).evaluate(point);
        m(i, j) = v;
        if (j != i) m(j, i) = std::move(v);
      }
    }
    if (!m.det().is_zero()) {
      out.probably_zero = false;
      break;
    }
  }
  return out;
}

SlpResult slp_test(const ApolarAlgebra& alg, const Polynomial& ell) {
  if (ell.is_zero()) throw std::invalid_argument("slp_test: zero linear form");
  if (ell.side() != Side::op || ell.total_degree() != 1 || !ell.is_homogeneous()) {
    throw std::invalid_argument("slp_test: expected a linear form on the operator side");
  }
  std::size_t n = alg.ctx()->nvars();
  std::vector<Rational> point(n);
  for (std::size_t i = 0; i < n; ++i) {
    point[i] = ell.coeff(Monomial::variable(n, i));
  }
  SlpResult res;
  for (int k = 0; k <= alg.socle_degree() / 2; ++k) {
    if (hessian_det_at(alg, k, point).is_zero()) {
      res.failing_order = k;
      return res;
    }
  }
  res.is_strong_lefschetz = true;
  return res;
}

bool slp_test_by_ranks(const ApolarAlgebra& alg, const Polynomial& ell) {
  int d = alg.socle_degree();
  for (int k = 0; k <= d / 2; ++k) {
    Polynomial power = ell.pow(static_cast<unsigned>(d - 2 * k));
    if (static_cast<int>(alg.mult_map(power, k).rank()) != alg.hilbert_value(k)) return false;
  }
  return true;
}

}  // namespace gorenlab
