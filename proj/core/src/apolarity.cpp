#include "gorenlab/apolarity.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorenlab {

namespace {

void require_dual_generator(const Polynomial& F) {
  if (F.side() != Side::form) {
    throw std::invalid_argument("dual generator must live on the form side");
  }
  if (F.is_zero()) throw std::invalid_argument("dual generator must be nonzero");
  if (!F.is_homogeneous()) throw std::invalid_argument("dual generator must be homogeneous");
}

}  // namespace

Catalecticant catalecticant_matrix(const Polynomial& F, int k) {
  require_dual_generator(F);
  int d = F.total_degree();
  if (k < 0 || k > d) throw std::invalid_argument("catalecticant_matrix: degree out of range");
  std::size_t n = F.ctx()->nvars();

  Catalecticant cat;
  cat.k = k;
  cat.row_monomials = monomials_of_degree(n, d - k);
  cat.col_monomials = monomials_of_degree(n, k);
  cat.matrix = QMatrix(cat.row_monomials.size(), cat.col_monomials.size());

  TermOrder less;
  for (std::size_t j = 0; j < cat.col_monomials.size(); ++j) {
    Polynomial image = diff_apply(cat.col_monomials[j], F);
    for (const auto& [m, c] : image.terms()) {
      auto it = std::lower_bound(cat.row_monomials.begin(), cat.row_monomials.end(), m, less);
      cat.matrix(static_cast<std::size_t>(it - cat.row_monomials.begin()), j) = c;
    }
  }
  return cat;
}

ApolarAlgebra::ApolarAlgebra(Polynomial F) : F_(std::move(F)) {
  require_dual_generator(F_);
  d_ = F_.total_degree();
  cache_.resize(d_ + 1);
  echelon_.resize(d_ + 1);
}

const ApolarAlgebra::DegreeData& ApolarAlgebra::degree(int k) const {
  if (k < 0 || k > d_) throw std::invalid_argument("ApolarAlgebra: degree out of range");
  DegreeData& dd = cache_[k];
  if (dd.ready) return dd;

  Catalecticant cat = catalecticant_matrix(F_, k);
  QMatrix::Echelon ech = cat.matrix.echelon();

  dd.monomials = std::move(cat.col_monomials);
  dd.h = static_cast<int>(ech.rank);
  dd.pivot_cols = ech.pivot_cols;
  dd.col_kind.assign(dd.monomials.size(), 0);
  std::vector<bool> is_pivot(dd.monomials.size(), false);
  for (std::size_t t = 0; t < dd.pivot_cols.size(); ++t) {
    is_pivot[dd.pivot_cols[t]] = true;
    dd.col_kind[dd.pivot_cols[t]] = static_cast<int>(t);
  }
  int free_index = 0;
  for (std::size_t c = 0; c < dd.monomials.size(); ++c) {
    if (!is_pivot[c]) {
      dd.col_kind[c] = ~free_index++;
      dd.free_cols.push_back(c);
    }
    else {
      dd.basis.push_back(dd.monomials[c]);
    }
  }
  echelon_[k] = std::move(ech);
  dd.ready = true;

  // Consistency with the symmetric Hilbert value when both halves get built.
  if (hf_ready_ && hf_[k] != dd.h) {
    throw std::logic_error("ApolarAlgebra: Hilbert value mismatch across dual degrees");
  }
  return dd;
}

void ApolarAlgebra::ensure_kernel(int k) const {
  degree(k);
  DegreeData& dd = cache_[k];
  if (dd.kernel_ready) return;
  auto full = QMatrix::kernel_from_echelon(echelon_[k]);
  dd.kernel_on_pivots.reserve(full.size());
  for (const auto& v : full) {
    std::vector<Rational> on_pivots(dd.pivot_cols.size());
    for (std::size_t t = 0; t < dd.pivot_cols.size(); ++t) on_pivots[t] = v[dd.pivot_cols[t]];
    dd.kernel_on_pivots.push_back(std::move(on_pivots));
  }
  dd.kernel_ready = true;
}

const HilbertVector& ApolarAlgebra::hilbert_function() const {
  if (hf_ready_) return hf_;
  hf_.assign(d_ + 1, 0);
  // The pairing matrices in degrees k and d-k are transposes of each other up
  // to invertible diagonal factors, so only the lower half is eliminated.
  for (int k = 0; k <= d_ / 2; ++k) {
    int h = degree(k).h;
    hf_[k] = h;
    hf_[d_ - k] = h;
  }
  hf_ready_ = true;
  return hf_;
}

int ApolarAlgebra::dim() const {
  const auto& h = hilbert_function();
  int total = 0;
  for (int v : h) total += v;
  return total;
}

int ApolarAlgebra::hilbert_value(int k) const {
  if (k < 0 || k > d_) return 0;
  return hilbert_function()[k];
}

const std::vector<Monomial>& ApolarAlgebra::graded_basis(int k) const {
  return degree(k).basis;
}

Polynomial ApolarAlgebra::basis_lift(int k, std::size_t j) const {
  return Polynomial::term(F_.ctx(), Side::op, graded_basis(k).at(j), Rational(1));
}

std::vector<Polynomial> ApolarAlgebra::annihilator_basis(int k) const {
  ensure_kernel(k);
  const DegreeData& dd = degree(k);
  std::vector<Polynomial> out;
  out.reserve(dd.free_cols.size());
  for (std::size_t f = 0; f < dd.free_cols.size(); ++f) {
    std::vector<Rational> vec(dd.monomials.size());
    vec[dd.free_cols[f]] = Rational(1);
    for (std::size_t t = 0; t < dd.pivot_cols.size(); ++t) {
      vec[dd.pivot_cols[t]] = dd.kernel_on_pivots[f][t];
    }
    vec = normalize_integral(std::move(vec));
    Polynomial p(F_.ctx(), Side::op);
    for (std::size_t c = 0; c < vec.size(); ++c) {
      if (!vec[c].is_zero()) p.add_term(dd.monomials[c], vec[c]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::size_t ApolarAlgebra::monomial_index(const DegreeData& dd, const Monomial& m) const {
  TermOrder less;
  auto it = std::lower_bound(dd.monomials.begin(), dd.monomials.end(), m, less);
  if (it == dd.monomials.end() || !(*it == m)) {
    throw std::logic_error("ApolarAlgebra: monomial outside the expected degree");
  }
  return static_cast<std::size_t>(it - dd.monomials.begin());
}

std::vector<Rational> ApolarAlgebra::class_coords(const Polynomial& q, int k) const {
  if (q.side() != Side::op) throw std::invalid_argument("class_coords: operator side expected");
  if (!q.ctx()->same_as(*F_.ctx())) throw std::invalid_argument("class_coords: context mismatch");
  if (!q.is_zero() && (!q.is_homogeneous() || q.total_degree() != k)) {
    throw std::invalid_argument("class_coords: polynomial not homogeneous of the requested degree");
  }
  ensure_kernel(k);
  const DegreeData& dd = degree(k);
  std::vector<Rational> coords(dd.pivot_cols.size());
  for (const auto& [m, c] : q.terms()) {
    std::size_t idx = monomial_index(dd, m);
    int kind = dd.col_kind[idx];
    if (kind >= 0) {
      coords[kind] += c;
    } else {
      // Reduce the free-column coefficient through its kernel vector, which
      // has a unit there and support on the pivot columns.
      const auto& kv = dd.kernel_on_pivots[~kind];
      for (std::size_t t = 0; t < coords.size(); ++t) {
        if (!kv[t].is_zero()) coords[t] -= c * kv[t];
      }
    }
  }
  return coords;
}

QMatrix ApolarAlgebra::mult_map(const Polynomial& g, int i) const {
  if (g.is_zero()) throw std::invalid_argument("mult_map: zero multiplier");
  if (g.side() != Side::op) throw std::invalid_argument("mult_map: operator side expected");
  if (!g.is_homogeneous()) throw std::invalid_argument("mult_map: homogeneous multiplier expected");
  int s = g.total_degree();
  if (i < 0 || i > d_) throw std::invalid_argument("mult_map: degree out of range");
  const DegreeData& src = degree(i);
  if (i + s > d_) return QMatrix(0, src.basis.size());

  QMatrix m(degree(i + s).h, src.basis.size());
  for (std::size_t j = 0; j < src.basis.size(); ++j) {
    Polynomial q = g * Polynomial::term(F_.ctx(), Side::op, src.basis[j], Rational(1));
    auto col = class_coords(q, i + s);
    for (std::size_t t = 0; t < col.size(); ++t) m(t, j) = std::move(col[t]);
  }
  return m;
}

HilbertVector hilbert_function(const Polynomial& F) {
  return ApolarAlgebra(F).hilbert_function();
}

namespace {

void require_linear_form(const ApolarAlgebra& alg, const Polynomial& ell) {
  if (ell.is_zero()) throw std::invalid_argument("expected a nonzero linear form");
  if (ell.side() != Side::op || !ell.is_homogeneous() || ell.total_degree() != 1) {
    throw std::invalid_argument("expected a linear form on the operator side");
  }
  if (!ell.ctx()->same_as(*alg.ctx())) throw std::invalid_argument("context mismatch");
}

}  // namespace

HilbertVector quotient_hf(const ApolarAlgebra& alg, const Polynomial& ell) {
  require_linear_form(alg, ell);
  int d = alg.socle_degree();
  HilbertVector out(d + 1, 0);
  out[0] = 1;
  for (int i = 1; i <= d; ++i) {
    out[i] = alg.hilbert_value(i) - static_cast<int>(alg.mult_map(ell, i - 1).rank());
  }
  return out;
}

HilbertVector colon_hf(const ApolarAlgebra& alg, const Polynomial& ell) {
  require_linear_form(alg, ell);
  Polynomial dF = diff_apply(ell, alg.dual_generator());
  if (dF.is_zero()) {
    throw std::domain_error("colon_hf: the linear form annihilates the dual generator");
  }
  return hilbert_function(dF);
}

}  // namespace gorenlab
