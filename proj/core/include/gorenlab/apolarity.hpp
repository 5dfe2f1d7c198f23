#ifndef GORENLAB_APOLARITY_HPP
#define GORENLAB_APOLARITY_HPP

#include <memory>
#include <vector>

#include "gorenlab/matrix.hpp"
#include "gorenlab/polynomial.hpp"

namespace gorenlab {

using HilbertVector = std::vector<int>;

/*
 * Matrix of the apolarity pairing in degree k: the map sending an operator of
 * degree k to its action on F. Rows are indexed by the canonical monomials of
 * the form side in degree d-k, columns by the canonical monomials of the
 * operator side in degree k; the entry is the coefficient of the row monomial
 * in (column monomial) applied to F. Its rank is h_k and its kernel is the
 * degree-k part of the annihilator of F.
 */
struct Catalecticant {
  int k = 0;
  std::vector<Monomial> row_monomials;
  std::vector<Monomial> col_monomials;
  QMatrix matrix;
};

Catalecticant catalecticant_matrix(const Polynomial& F, int k);

/*
 * The graded Artinian Gorenstein algebra A = R/Ann(F) attached to a nonzero
 * homogeneous dual generator F of degree d. Per-degree data (Hilbert values,
 * monomial basis lifts, annihilator kernels, class coordinates) is computed
 * on demand and cached; instances are cheap to copy and safe to share once
 * construction is done, but the lazy caches are not synchronized, so confine
 * each instance to one thread.
 *
 * The degree-k basis is the greedy one: canonical monomials of degree k are
 * scanned in order and kept whenever their catalecticant image is independent
 * of the images already kept (equivalently, the pivot columns of the
 * fraction-free elimination).
 */
class ApolarAlgebra {
 public:
  explicit ApolarAlgebra(Polynomial F);

  const Polynomial& dual_generator() const { return F_; }
  const Ctx& ctx() const { return F_.ctx(); }
  int socle_degree() const { return d_; }

  const HilbertVector& hilbert_function() const;
  int dim() const;  // sum of the Hilbert values

  int hilbert_value(int k) const;
  const std::vector<Monomial>& graded_basis(int k) const;
  Polynomial basis_lift(int k, std::size_t j) const;
  std::vector<Polynomial> annihilator_basis(int k) const;

  /*
   * Coordinates of the class of q (a homogeneous operator of degree k) in the
   * greedy basis of A_k: the coefficient vector of q is reduced modulo the
   * annihilator kernel so that only basis positions remain.
   */
  std::vector<Rational> class_coords(const Polynomial& q, int k) const;

  /*
   * Matrix of multiplication by g from degree i to degree i + deg g, in the
   * greedy bases; a 0 x h_i matrix when the target degree exceeds d. The rank
   * is independent of the basis choice.
   */
  QMatrix mult_map(const Polynomial& g, int i) const;

 private:
  struct DegreeData {
    bool ready = false;
    int h = 0;
    std::vector<Monomial> monomials;      // all canonical monomials of the degree
    std::vector<std::size_t> pivot_cols;  // greedy basis positions
    std::vector<Monomial> basis;
    std::vector<int> col_kind;  // >= 0: basis index; < 0: ~free index
    bool kernel_ready = false;
    // kernel vector per free column, stored on the pivot positions only
    std::vector<std::vector<Rational>> kernel_on_pivots;
    std::vector<std::size_t> free_cols;
  };

  const DegreeData& degree(int k) const;
  void ensure_kernel(int k) const;
  std::size_t monomial_index(const DegreeData& dd, const Monomial& m) const;

  Polynomial F_;
  int d_;
  mutable std::vector<DegreeData> cache_;
  mutable std::vector<QMatrix::Echelon> echelon_;
  mutable HilbertVector hf_;
  mutable bool hf_ready_ = false;
};

HilbertVector hilbert_function(const Polynomial& F);

/*
 * Hilbert function of the quotient by a linear form: entry i is
 * h_i - rank(multiplication by ell from degree i-1), entry 0 is 1. Zeros may
 * appear; the vector keeps full length d+1.
 */
HilbertVector quotient_hf(const ApolarAlgebra& alg, const Polynomial& ell);

/*
 * Hilbert function of the colon algebra, i.e. of the algebra with dual
 * generator (ell applied to F). Throws std::domain_error when ell annihilates
 * F, in which case the colon algebra degenerates.
 */
HilbertVector colon_hf(const ApolarAlgebra& alg, const Polynomial& ell);

}  // namespace gorenlab

#endif  // GORENLAB_APOLARITY_HPP
