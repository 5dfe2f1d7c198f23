#ifndef GORENLAB_LEFSCHETZ_HPP
#define GORENLAB_LEFSCHETZ_HPP

#include <cstdint>
#include <vector>

#include "gorenlab/apolarity.hpp"
#include "gorenlab/partition.hpp"
#include "gorenlab/rng.hpp"

namespace gorenlab {

// ell is weak Lefschetz iff multiplication by ell from every degree i to i+1
// has rank min(h_i, h_{i+1}).
bool wlp_test(const ApolarAlgebra& alg, const Polynomial& ell);

// Nonzero linear form on the operator side with integer coefficients drawn
// uniformly from [-bound, bound].
Polynomial random_linear_form(const Ctx& ctx, Rng& rng, int bound);

/*
 * Randomized weak Lefschetz detection: samples `trials` linear forms, records
 * the per-degree maximum of the multiplication ranks (the sampled generic
 * rank profile), and reports WLP when a single sample reaches maximal rank in
 * every degree; that sample is returned as the witness. Genericity is a
 * Zariski-open condition, so random integer forms attain it with
 * overwhelming probability and repeated trials guard degenerate draws.
 */
struct WlpGenericResult {
  bool has_wlp = false;
  Polynomial witness;
  std::vector<std::size_t> generic_rank_profile;  // index i: max rank A_i -> A_{i+1}
};

WlpGenericResult wlp_generic(const ApolarAlgebra& alg, int trials, std::uint64_t seed,
                             int bound = 10);

/*
 * Whole-algebra rank sequence of the powers of ell: entry k is the sum over i
 * of rank(x ell^k : A_i -> A_{i+k}), entry 0 is dim A. The sequence stops
 * after the first zero.
 */
std::vector<int> power_rank_sequence(const ApolarAlgebra& alg, const Polynomial& ell);

/*
 * Jordan type of multiplication by ell: part m occurs with multiplicity
 * r_{m-1} - 2 r_m + r_{m+1}, where r is the power rank sequence.
 */
Partition jordan_type(const ApolarAlgebra& alg, const Polynomial& ell);

/*
 * A string (z, ell z, ..., ell^(len-1) z) of the Jordan decomposition; seeds
 * are homogeneous. The extraction walks string lengths from the longest down
 * and, inside each length, degrees from the bottom up, greedily completing
 * the span collected so far from the kernel filtration of the powers of ell;
 * the kernel bases make the choice deterministic. Together the strings form
 * a basis of A (verified by rank), the multiset of lengths equals the Jordan
 * type (verified), and each seed satisfies ell^len z = 0.
 */
struct JordanString {
  Polynomial seed;
  int start_degree = 0;
  int length = 0;
};

std::vector<JordanString> pre_jordan_strings(const ApolarAlgebra& alg, const Polynomial& ell);

struct JordanReport {
  Polynomial ell;
  Partition partition;
  std::vector<int> rank_sequence;
  std::vector<JordanString> strings;
  bool is_wlp_element = false;
  bool is_slp_element = false;
  Partition sampled_generic;  // dominance-maximal Jordan type over sampled forms
};

/*
 * Builds the full report and asserts the classical consistency facts:
 * the number of parts equals the Sperner number exactly for weak Lefschetz
 * elements, the partition equals the conjugate Hilbert function exactly for
 * strong Lefschetz elements, and every Jordan type is dominated by the
 * sampled generic one. Violations throw std::logic_error — they would be
 * implementation bugs, not data errors.
 */
JordanReport jordan_consistency(const ApolarAlgebra& alg, const Polynomial& ell,
                                int generic_trials = 5, std::uint64_t seed = 42,
                                bool with_strings = true);

}  // namespace gorenlab

#endif  // GORENLAB_LEFSCHETZ_HPP
