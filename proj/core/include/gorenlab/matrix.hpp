#ifndef GORENLAB_MATRIX_HPP
#define GORENLAB_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gorenlab/rational.hpp"

namespace gorenlab {

/*
 * Dense matrix of exact rationals. Rank, kernel, and determinant all go
 * through fraction-free (Bareiss) Gaussian elimination over integers after
 * clearing denominators row by row; pivoting is deterministic: columns are
 * scanned left to right and the first row with a nonzero entry wins. This
 * makes every rank, kernel basis, and pivot-column selection reproducible.
 */
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix hcat(std::span<const QMatrix> blocks);
  static QMatrix vcat(std::span<const QMatrix> blocks);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QMatrix transposed() const;
  QMatrix operator*(const QMatrix& o) const;
  std::vector<Rational> apply(std::span<const Rational> v) const;

  struct Echelon {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    int sign = 1;                    // parity of the row swaps
    std::vector<mpz_class> m;        // integer echelon form, row-major
    std::vector<mpz_class> row_scale;
    std::size_t rows = 0, cols = 0;
    const mpz_class& at(std::size_t i, std::size_t j) const { return m[i * cols + j]; }
  };
  Echelon echelon() const;

  std::size_t rank() const { return echelon().rank; }
  // Square matrices only; exact value, 0 for singular input.
  Rational det() const;
  /*
   * Canonical kernel basis: one vector per non-pivot column f, with entry 1
   * at f, the back-solved values at the pivot columns, and 0 elsewhere.
   */
  std::vector<std::vector<Rational>> kernel() const;
  static std::vector<std::vector<Rational>> kernel_from_echelon(const Echelon& e);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Scales to coprime integers with the first nonzero entry positive.
std::vector<Rational> normalize_integral(std::vector<Rational> v);

/*
 * Incrementally maintained row space in reduced echelon form; used for greedy
 * basis extension and membership tests in the Jordan-string extraction.
 */
class RowSpan {
 public:
  explicit RowSpan(std::size_t dim) : dim_(dim) {}

  // Returns true (and absorbs v) iff v was independent of the current span.
  bool insert(std::vector<Rational> v);
  bool contains(std::span<const Rational> v) const;
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return dim_; }

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;  // RREF rows
  std::vector<std::size_t> pivots_;
};

}  // namespace gorenlab

#endif  // GORENLAB_MATRIX_HPP
