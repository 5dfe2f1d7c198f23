#include "gorenlab/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace gorenlab {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("QMatrix: ragged initializer");
    for (const auto& x : r) a_.push_back(x);
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

QMatrix QMatrix::hcat(std::span<const QMatrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = blocks.front().rows(), cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("QMatrix::hcat: row count mismatch");
    cols += b.cols();
  }
  QMatrix m(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, offset + j) = b(i, j);
    }
    offset += b.cols();
  }
  return m;
}

QMatrix QMatrix::vcat(std::span<const QMatrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t cols = blocks.front().cols(), rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("QMatrix::vcat: column count mismatch");
    rows += b.rows();
  }
  QMatrix m(rows, cols);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(offset + i, j) = b(i, j);
    }
    offset += b.rows();
  }
  return m;
}

QMatrix QMatrix::transposed() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("QMatrix: product shape mismatch");
  QMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& aik = (*this)(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Rational& bkj = o(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

std::vector<Rational> QMatrix::apply(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("QMatrix::apply: length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

QMatrix::Echelon QMatrix::echelon() const {
  Echelon e;
  e.rows = rows_;
  e.cols = cols_;
  e.m.resize(rows_ * cols_);
  e.row_scale.assign(rows_, mpz_class(1));

  // Clear denominators: scale each row by the lcm of its denominators.
  for (std::size_t i = 0; i < rows_; ++i) {
    mpz_class l(1);
    for (std::size_t j = 0; j < cols_; ++j) {
      const mpz_class& den = (*this)(i, j).den();
      if (den != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    }
    e.row_scale[i] = l;
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& x = (*this)(i, j);
      e.m[i * cols_ + j] = x.num() * (l / x.den());
    }
  }

  auto at = [&](std::size_t i, std::size_t j) -> mpz_class& { return e.m[i * cols_ + j]; };

  mpz_class prev(1);
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols_ && r < rows_; ++col) {
    std::size_t pivot = r;
    while (pivot < rows_ && at(pivot, col) == 0) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(at(r, j), at(pivot, j));
      std::swap(e.row_scale[r], e.row_scale[pivot]);
      e.sign = -e.sign;
    }
    const mpz_class p = at(r, col);
    for (std::size_t i = r + 1; i < rows_; ++i) {
      const mpz_class f = at(i, col);
      for (std::size_t j = col + 1; j < cols_; ++j) {
        mpz_class t = p * at(i, j) - f * at(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        at(i, j) = std::move(t);
      }
      at(i, col) = 0;
    }
    prev = p;
    e.pivot_cols.push_back(col);
    ++r;
  }
  e.rank = r;
  return e;
}

Rational QMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("QMatrix::det: not square");
  if (rows_ == 0) return Rational(1);
  Echelon e = echelon();
  if (e.rank < rows_) return Rational(0);
  // For a nonsingular matrix the final Bareiss pivot equals the determinant
  // of the scaled integer matrix.
  mpz_class scale(1);
  for (const auto& s : e.row_scale) scale *= s;
  Rational d(e.at(rows_ - 1, cols_ - 1), scale);
  return e.sign < 0 ? -d : d;
}

std::vector<std::vector<Rational>> QMatrix::kernel_from_echelon(const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(e.cols);
    x[f] = Rational(1);
    for (std::size_t ri = e.rank; ri-- > 0;) {
      std::size_t pc = e.pivot_cols[ri];
      if (f < pc) continue;  // nothing to balance yet
      Rational s(0);
      for (std::size_t j = pc + 1; j < e.cols; ++j) {
        if (e.at(ri, j) != 0 && !x[j].is_zero()) s += Rational(e.at(ri, j)) * x[j];
      }
      x[pc] = -s / Rational(e.at(ri, pc));
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<Rational>> QMatrix::kernel() const {
  return kernel_from_echelon(echelon());
}

std::vector<Rational> normalize_integral(std::vector<Rational> v) {
  mpz_class l(1);
  for (const auto& x : v) {
    if (x.den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  }
  mpz_class g(0);
  std::vector<mpz_class> ints(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].num() * (l / v[i].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;  // zero vector
  int flip = 1;
  for (const auto& x : ints) {
    if (x != 0) {
      flip = sgn(x) < 0 ? -1 : 1;
      break;
    }
  }
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(mpz_class(ints[i] * flip / g));
  return v;
}

std::vector<Rational> RowSpan::reduce(std::vector<Rational> v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Rational f = c;  // rows are normalized to pivot 1
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
    }
  }
  return v;
}

bool RowSpan::insert(std::vector<Rational> v) {
  if (v.size() != dim_) throw std::invalid_argument("RowSpan::insert: length mismatch");
  v = reduce(std::move(v));
  std::size_t pivot = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == dim_) return false;
  const Rational inv = Rational(1) / v[pivot];
  for (auto& x : v) x *= inv;
  // Keep the stored rows fully reduced against the new one.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational& c = rows_[r][pivot];
    if (c.is_zero()) continue;
    const Rational f = c;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!v[j].is_zero()) rows_[r][j] -= f * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

bool RowSpan::contains(std::span<const Rational> v) const {
  std::vector<Rational> copy(v.begin(), v.end());
  copy = reduce(std::move(copy));
  for (const auto& x : copy) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace gorenlab
