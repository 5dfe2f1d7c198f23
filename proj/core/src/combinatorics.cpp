#include "gorenlab/combinatorics.hpp"

#include <stdexcept>

namespace gorenlab {

mpz_class binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

BinomialExpansion binom_expand(long n, long r) {
  if (n < 1 || r < 1) throw std::domain_error("binom_expand: requires n >= 1 and r >= 1");
  BinomialExpansion ex;
  ex.n = n;
  ex.r = r;
  mpz_class rest(n);
  long j = r;
  while (rest > 0) {
    long m = j;  // smallest candidate: C(j, j) = 1 <= rest
    while (binomial(m + 1, j) <= rest) ++m;
    ex.terms.emplace_back(m, j);
    rest -= binomial(m, j);
    --j;
  }
  return ex;
}

mpz_class macaulay_upper(long n, long r) {
  if (n == 0) return 0;
  mpz_class s(0);
  for (auto [m, j] : binom_expand(n, r).terms) s += binomial(m + 1, j + 1);
  return s;
}

mpz_class green_reduce(long n, long r) {
  if (n == 0) return 0;
  mpz_class s(0);
  for (auto [m, j] : binom_expand(n, r).terms) s += binomial(m - 1, j);
  return s;
}

bool macaulay_check(const std::vector<int>& hf) {
  if (hf.empty() || hf[0] != 1) return false;
  for (std::size_t t = 1; t + 1 < hf.size(); ++t) {
    if (hf[t] < 0 || hf[t + 1] < 0) return false;
    if (hf[t] == 0) {
      if (hf[t + 1] != 0) return false;
      continue;
    }
    if (macaulay_upper(hf[t], static_cast<long>(t)) < hf[t + 1]) return false;
  }
  return true;
}

bool green_check(const std::vector<int>& hf, const std::vector<int>& quotient_hf) {
  std::size_t len = std::max(hf.size(), quotient_hf.size());
  for (std::size_t t = 1; t < len; ++t) {
    int h = t < hf.size() ? hf[t] : 0;
    int q = t < quotient_hf.size() ? quotient_hf[t] : 0;
    mpz_class bound = h > 0 ? green_reduce(h, static_cast<long>(t)) : mpz_class(0);
    if (bound < q) return false;
  }
  return true;
}

bool unimodal(const std::vector<int>& hf) {
  bool falling = false;
  for (std::size_t i = 1; i < hf.size(); ++i) {
    if (hf[i] > hf[i - 1] && falling) return false;
    if (hf[i] < hf[i - 1]) falling = true;
  }
  return true;
}

bool symmetric(const std::vector<int>& hf) {
  for (std::size_t i = 0, j = hf.size(); i < j; ++i) {
    if (hf[i] != hf[j - 1 - i]) return false;
  }
  return true;
}

bool wlp_forced_by_consecutive_growth(const std::vector<int>& hf) {
  if (hf.size() < 3 || hf[0] != 1) return false;
  std::size_t d = hf.size() - 1;
  if (d % 2 != 0) return false;
  if (!symmetric(hf)) return false;
  std::size_t s = d / 2;
  for (std::size_t i = 1; i < s; ++i) {
    if (hf[i + 1] != hf[i] + 1) return false;
  }
  for (std::size_t k = d / 2 + 1; k <= d - 1; ++k) {
    if (hf[k] <= static_cast<int>(k)) return true;
  }
  return false;
}

bool wlp_forced_by_flat_top(const std::vector<int>& hf) {
  if (hf.size() < 2) return false;
  std::size_t d = hf.size() - 1;
  std::size_t t = 0;
  while (t < d && hf[t] < hf[t + 1]) ++t;
  if (t == 0 || t == d) return false;  // no strict rise or no room to fall
  std::size_t s = t;
  while (s < d && hf[s] == hf[s + 1]) ++s;
  if (s < t + 2) return false;  // plateau shorter than three entries
  if (hf[s] > static_cast<int>(s)) return false;
  for (std::size_t i = s; i < d; ++i) {
    if (hf[i] <= hf[i + 1]) return false;
  }
  return true;
}

}  // namespace gorenlab
