#ifndef GORENLAB_COMBINATORICS_HPP
#define GORENLAB_COMBINATORICS_HPP

#include <utility>
#include <vector>

#include "gorenlab/rational.hpp"

namespace gorenlab {

// Exact binomial coefficient; 0 when k < 0 or n < k.
mpz_class binomial(long n, long k);

/*
 * The r-th binomial expansion of n: the unique decomposition
 *   n = C(m_r, r) + C(m_{r-1}, r-1) + ... + C(m_e, e)
 * with m_r > m_{r-1} > ... > m_e >= e >= 1, found greedily from the top.
 */
struct BinomialExpansion {
  long n = 0, r = 0;
  std::vector<std::pair<long, long>> terms;  // (m_j, j), j descending from r
};

BinomialExpansion binom_expand(long n, long r);  // requires n, r >= 1

// n^{<r>} = sum C(m_j + 1, j + 1): the Macaulay growth bound from degree r.
mpz_class macaulay_upper(long n, long r);
// n_{<r>} = sum C(m_j - 1, j): the general-hyperplane restriction bound.
mpz_class green_reduce(long n, long r);

// H(0) = 1 and H(t+1) <= H(t)^{<t>} for all t >= 1.
bool macaulay_check(const std::vector<int>& hf);
// quotient_t <= (h_t)_{<t>} for all t >= 1; vectors are zero-padded.
bool green_check(const std::vector<int>& hf, const std::vector<int>& quotient_hf);

bool unimodal(const std::vector<int>& hf);
bool symmetric(const std::vector<int>& hf);

/*
 * Shape predicates on Gorenstein h-vectors that force the weak Lefschetz
 * property, checked purely arithmetically.
 *
 * Consecutive growth: even socle degree 2s, symmetric, h_1..h_s consecutive
 * increasing integers, and h_k <= k for some d/2 + 1 <= k <= d - 1.
 */
bool wlp_forced_by_consecutive_growth(const std::vector<int>& hf);
/*
 * Short flat top: strict rise to a plateau h_t = ... = h_s of length >= 3
 * (s >= t + 2) with h_s <= s, then strict fall.
 */
bool wlp_forced_by_flat_top(const std::vector<int>& hf);

}  // namespace gorenlab

#endif  // GORENLAB_COMBINATORICS_HPP
