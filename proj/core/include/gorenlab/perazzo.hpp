#ifndef GORENLAB_PERAZZO_HPP
#define GORENLAB_PERAZZO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gorenlab/apolarity.hpp"

namespace gorenlab {

/*
 * A Perazzo dual generator F = sum X_i p_i + G in n+1 coefficient variables
 * and m base variables, with the p_i of degree d-1 in the base variables
 * only, linearly independent but algebraically dependent, and G of degree d
 * in the base variables. The algebraic dependence forces the classical
 * Hessian of F to vanish while linear independence keeps V(F) from being a
 * cone.
 */
struct PerazzoForm {
  int n = 0, m = 0, d = 0;
  Ctx ctx;                    // n+1 coefficient variables, then m base variables
  std::vector<Polynomial> p;  // n+1 entries of degree d-1
  Polynomial G;               // degree d or zero
  Polynomial F;               // the assembled dual generator
};

Ctx perazzo_context(int n, int m);

/*
 * Validating constructor. Linear independence is an exact rank computation on
 * the coefficient matrix of the p_i. Algebraic dependence is automatic when
 * n+1 exceeds m; otherwise the Jacobian of the p_i in the base variables is
 * evaluated at five seeded random rational points and must be rank-deficient
 * at each of them (a full-rank point certifies independence exactly, so it
 * raises immediately).
 */
PerazzoForm build_perazzo(int n, int m, int d, std::vector<Polynomial> p, Polynomial G);
PerazzoForm build_perazzo(int n, int m, int d, const std::vector<std::string>& p_texts,
                          const std::string& g_text);

// Splits an assembled form back into (p_i, G) and re-validates it.
PerazzoForm perazzo_from_form(int n, int m, const Polynomial& F);

/*
 * The three normal forms of degree d >= 5 with the termwise-minimal Hilbert
 * function (1,5,6,...,6,5,1):
 *   i:   X*U^(d-1) + Y*U^(d-2)*V + Z*U^(d-3)*V^2
 *   ii:  X*U^(d-1) + Y*U^(d-2)*V + Z*V^(d-1)
 *   iii: X*U^(d-1) + Y*(U+lambda*V)^(d-1) + Z*V^(d-1),  lambda != 0
 */
enum class NormalFormVariant { i, ii, iii };

PerazzoForm normal_form(NormalFormVariant variant, int d, const Rational& lambda = Rational(1));
NormalFormVariant parse_variant(const std::string& text);
std::string variant_name(NormalFormVariant v);

// Random threefold (n = m = 2) of degree d >= 5 with integer coefficients in
// [-coeff_bound, coeff_bound], resampled until the p_i are independent;
// byte-deterministic for a fixed seed.
PerazzoForm random_perazzo_threefold(int d, std::uint64_t seed, int coeff_bound = 10);

// Hilbert-function criterion for the weak Lefschetz property of threefold
// Perazzo algebras of socle degree d: at most one value equal to d+2.
bool wlp_predicate(const HilbertVector& hf, int d);

/*
 * Coefficient criterion for weak Lefschetz elements
 * a0*x + a1*y + a2*z + b0*u + b1*v on the normal forms:
 *   i: b0 != 0,  ii: b0*b1 != 0,  iii: b0*b1*(b0 + lambda*b1) != 0.
 */
bool lefschetz_element_predicate(NormalFormVariant variant, const Rational& lambda,
                                 const Polynomial& ell);

/*
 * Coefficients in the binomial-weighted expansions
 *   p_0 = sum C(d-1,i) a_i U^(d-1-i) V^i   (b, c likewise for p_1, p_2)
 *   G   = sum C(d,i)   g_i U^(d-i)   V^i
 * for threefolds; extraction divides by the binomial weights exactly and
 * round-trips.
 */
struct PerazzoCoefficients {
  int d = 0;
  std::vector<Rational> a, b, c;  // length d
  std::vector<Rational> g;        // length d+1
};

PerazzoCoefficients extract_coefficients(const PerazzoForm& pf);
PerazzoForm threefold_from_coefficients(const PerazzoCoefficients& coeffs);

/*
 * Hankel building blocks of the degree-2 and degree-3 catalecticants of a
 * threefold: A_k has rows r = 0..d-k with row (a_r, ..., a_{r+k-1}), G_k the
 * same with width k+1; M_k glues the three letter blocks side by side, N_k
 * stacks the blocks one degree up, and the primed variants append the G
 * block. N and N' are kept separate: the two-sided rank bounds need both.
 */
struct BlockMatrices {
  QMatrix a2, b2, c2, a3, b3, c3, a4, b4, c4, g2, g3;
  QMatrix m2, m3;             // (A_k | B_k | C_k)
  QMatrix n2, n3;             // stacked A/B/C one degree up
  QMatrix n2_prime, n3_prime; // stacked with the G block appended
};

BlockMatrices block_matrices(const PerazzoForm& pf);

/*
 * Verifies the two-sided bounds
 *   rank M_2 + rank N_2 <= h_2 <= rank M_2 + rank N'_2
 *   rank M_3 + rank N_3 <= h_3 <= rank M_3 + rank N'_3
 * against the computed Hilbert function and reports all six ranks.
 */
struct RankBoundsReport {
  int d = 0;
  int h2 = 0, h3 = 0;
  std::size_t rank_m2 = 0, rank_m3 = 0;
  std::size_t rank_n2 = 0, rank_n3 = 0;
  std::size_t rank_n2_prime = 0, rank_n3_prime = 0;
  bool h2_within_bounds = false;
  bool h3_within_bounds = false;
  bool n3_prime_at_most_4 = false;
  bool ok() const { return h2_within_bounds && h3_within_bounds && n3_prime_at_most_4; }
};

RankBoundsReport hf_rank_bounds_check(const PerazzoForm& pf);

}  // namespace gorenlab

#endif  // GORENLAB_PERAZZO_HPP
