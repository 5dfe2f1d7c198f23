#ifndef GORENLAB_HESSIAN_HPP
#define GORENLAB_HESSIAN_HPP

#include <optional>
#include <span>
#include <vector>

#include "gorenlab/apolarity.hpp"

namespace gorenlab {

/*
 * Order-k Hessian of a dual generator F: the symmetric h_k x h_k matrix over
 * the greedy monomial basis (a_1, ..., a_{h_k}) of A_k whose (i, j) entry is
 * (a_i * a_j) applied to F, a form of degree d - 2k. Whether its determinant
 * vanishes does not depend on the basis choice.
 */
struct HessianMatrix {
  int order = 0;
  std::vector<Monomial> basis;
  std::vector<Polynomial> entries;  // row-major, size h x h

  std::size_t size() const { return basis.size(); }
  const Polynomial& at(std::size_t i, std::size_t j) const { return entries[i * size() + j]; }
};

HessianMatrix hessian_matrix(const ApolarAlgebra& alg, int k);
HessianMatrix hessian_matrix(const Polynomial& F, int k);

// Entries evaluated at the point, then an exact determinant.
Rational hessian_det_at(const ApolarAlgebra& alg, int k, std::span<const Rational> point);
Rational hessian_det_at(const Polynomial& F, int k, std::span<const Rational> point);

/*
 * Symbolic determinant of the order-k Hessian, expanded by minors with
 * memoization. Refuses (std::domain_error) when h_k exceeds the size guard,
 * since symbolic determinants blow up; callers should fall back to
 * evaluation at points.
 */
Polynomial hessian_poly(const ApolarAlgebra& alg, int k, std::size_t size_guard = 8);
Polynomial hessian_poly(const Polynomial& F, int k, std::size_t size_guard = 8);

// Evaluation at seeded random integer points; honest "probably zero" verdict
// for sizes past the symbolic guard.
struct ProbablyZero {
  bool probably_zero = false;
  std::vector<std::vector<Rational>> points;
};
ProbablyZero hessian_probably_zero(const ApolarAlgebra& alg, int k, int num_points,
                                   std::uint64_t seed, int bound = 10);

/*
 * Strong Lefschetz test for a linear form: ell is strong Lefschetz iff no
 * Hessian determinant of order k = 0..floor(d/2) vanishes at ell's
 * coefficient vector. failing_order reports the first vanishing order.
 */
struct SlpResult {
  bool is_strong_lefschetz = false;
  std::optional<int> failing_order;
};

SlpResult slp_test(const ApolarAlgebra& alg, const Polynomial& ell);

// Independent route for cross-validation: full rank of multiplication by
// ell^(d-2k) from degree k to degree d-k for every k up to the middle.
bool slp_test_by_ranks(const ApolarAlgebra& alg, const Polynomial& ell);

}  // namespace gorenlab

#endif  // GORENLAB_HESSIAN_HPP
