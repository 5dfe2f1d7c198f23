#include "gorenlab/lefschetz.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gorenlab/hessian.hpp"

namespace gorenlab {

namespace {

void require_linear(const ApolarAlgebra& alg, const Polynomial& ell) {
  if (ell.is_zero()) throw std::invalid_argument("expected a nonzero linear form");
  if (ell.side() != Side::op || ell.total_degree() != 1) {
    throw std::invalid_argument("expected a linear form on the operator side");
  }
  if (!ell.ctx()->same_as(*alg.ctx())) throw std::invalid_argument("context mismatch");
}

}  // namespace

bool wlp_test(const ApolarAlgebra& alg, const Polynomial& ell) {
  require_linear(alg, ell);
  int d = alg.socle_degree();
  for (int i = 0; i < d; ++i) {
    std::size_t expected = static_cast<std::size_t>(
        std::min(alg.hilbert_value(i), alg.hilbert_value(i + 1)));
    if (alg.mult_map(ell, i).rank() != expected) return false;
  }
  return true;
}

Polynomial random_linear_form(const Ctx& ctx, Rng& rng, int bound) {
  while (true) {
    Polynomial ell(ctx, Side::op);
    for (std::size_t i = 0; i < ctx->nvars(); ++i) {
      ell.add_term(Monomial::variable(ctx->nvars(), i), rng.coefficient(bound));
    }
    if (!ell.is_zero()) return ell;
  }
}

WlpGenericResult wlp_generic(const ApolarAlgebra& alg, int trials, std::uint64_t seed,
                             int bound) {
  if (trials < 1) throw std::invalid_argument("wlp_generic: trials must be >= 1");
  int d = alg.socle_degree();
  WlpGenericResult res;
  res.witness = Polynomial(alg.ctx(), Side::op);
  res.generic_rank_profile.assign(d > 0 ? d : 0, 0);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Polynomial ell = random_linear_form(alg.ctx(), rng, bound);
    bool all_max = true;
    for (int i = 0; i < d; ++i) {
      std::size_t r = alg.mult_map(ell, i).rank();
      res.generic_rank_profile[i] = std::max(res.generic_rank_profile[i], r);
      std::size_t expected = static_cast<std::size_t>(
          std::min(alg.hilbert_value(i), alg.hilbert_value(i + 1)));
      if (r != expected) all_max = false;
    }
    if (all_max && !res.has_wlp) {
      res.has_wlp = true;
      res.witness = ell;
    }
  }
  return res;
}

std::vector<int> power_rank_sequence(const ApolarAlgebra& alg, const Polynomial& ell) {
  require_linear(alg, ell);
  int d = alg.socle_degree();
  std::vector<int> ranks{alg.dim()};
  for (int k = 1; k <= d + 1; ++k) {
    Polynomial power = ell.pow(static_cast<unsigned>(k));
    if (power.is_zero()) break;
    int r = 0;
    for (int i = 0; i + k <= d; ++i) {
      r += static_cast<int>(alg.mult_map(power, i).rank());
    }
    if (r == 0) break;
    ranks.push_back(r);
  }
  return ranks;
}

Partition jordan_type(const ApolarAlgebra& alg, const Polynomial& ell) {
  std::vector<int> r = power_rank_sequence(alg, ell);
  auto rank_at = [&](int k) { return k < static_cast<int>(r.size()) ? r[k] : 0; };
  std::vector<int> parts;
  for (int m = static_cast<int>(r.size()); m >= 1; --m) {
    int mult = rank_at(m - 1) - 2 * rank_at(m) + rank_at(m + 1);
    if (mult < 0) throw std::logic_error("jordan_type: rank sequence is not convex");
    parts.insert(parts.end(), mult, m);
  }
  Partition p(parts);
  if (p.total() != alg.dim()) {
    throw std::logic_error("jordan_type: partition total differs from dim A");
  }
  return p;
}

namespace {

struct Chain {
  int start_degree;
  int length;
  std::vector<std::vector<Rational>> elements;  // coordinates per degree slice
};

// Kernel of (x ell)^m restricted to A_i, as canonical unit-form vectors.
std::vector<std::vector<Rational>> power_kernel(
    const ApolarAlgebra& alg, const std::vector<QMatrix>& step, int i, int m) {
  int d = alg.socle_degree();
  int h = alg.hilbert_value(i);
  if (m == 0) return {};
  if (i + m > d) {
    // The map lands beyond the socle, so everything is killed.
    std::vector<std::vector<Rational>> all;
    for (int j = 0; j < h; ++j) {
      std::vector<Rational> e(h);
      e[j] = Rational(1);
      all.push_back(std::move(e));
    }
    return all;
  }
  QMatrix prod = step[i];
  for (int t = 1; t < m; ++t) prod = step[i + t] * prod;
  return prod.kernel();
}

}  // namespace

std::vector<JordanString> pre_jordan_strings(const ApolarAlgebra& alg, const Polynomial& ell) {
  require_linear(alg, ell);
  int d = alg.socle_degree();
  Partition type = jordan_type(alg, ell);
  int max_len = type.empty() ? 0 : type.parts().front();

  std::vector<QMatrix> step;  // multiplication by ell per degree
  step.reserve(d);
  for (int i = 0; i < d; ++i) step.push_back(alg.mult_map(ell, i));

  std::vector<Chain> chains;
  for (int m = max_len; m >= 1; --m) {
    for (int i = 0; i <= d; ++i) {
      int h = alg.hilbert_value(i);
      if (h == 0) continue;
      RowSpan base(static_cast<std::size_t>(h));
      for (auto& v : power_kernel(alg, step, i, m - 1)) {
        if (!base.insert(std::move(v))) {
          throw std::logic_error("pre_jordan_strings: kernel filtration degenerated");
        }
      }
      // Elements carried down from longer strings living in this degree.
      for (const Chain& c : chains) {
        if (c.length > m && c.start_degree + (c.length - m) == i) {
          if (!base.insert(c.elements[c.length - m])) {
            throw std::logic_error("pre_jordan_strings: carried string element is dependent");
          }
        }
      }
      for (auto& v : power_kernel(alg, step, i, m)) {
        if (!base.insert(v)) continue;
        Chain c;
        c.start_degree = i;
        c.length = m;
        c.elements.push_back(std::move(v));
        for (int t = 1; t < m; ++t) {
          c.elements.push_back(step[i + t - 1].apply(c.elements.back()));
        }
        chains.push_back(std::move(c));
      }
    }
  }

  // The union of all string elements must be a basis of A.
  std::vector<int> offsets(d + 2, 0);
  for (int i = 0; i <= d; ++i) offsets[i + 1] = offsets[i] + alg.hilbert_value(i);
  int dim = offsets[d + 1];
  RowSpan whole(static_cast<std::size_t>(dim));
  std::vector<int> lengths;
  for (const Chain& c : chains) {
    lengths.push_back(c.length);
    for (int t = 0; t < c.length; ++t) {
      std::vector<Rational> full(static_cast<std::size_t>(dim));
      int deg = c.start_degree + t;
      for (std::size_t j = 0; j < c.elements[t].size(); ++j) {
        full[offsets[deg] + j] = c.elements[t][j];
      }
      if (!whole.insert(std::move(full))) {
        throw std::logic_error("pre_jordan_strings: string elements are not independent");
      }
    }
  }
  if (static_cast<int>(whole.dim()) != dim) {
    throw std::logic_error("pre_jordan_strings: strings do not span A");
  }
  if (Partition(lengths) != type) {
    throw std::logic_error("pre_jordan_strings: string lengths disagree with the Jordan type");
  }

  std::vector<JordanString> out;
  out.reserve(chains.size());
  for (const Chain& c : chains) {
    const auto& basis = alg.graded_basis(c.start_degree);
    Polynomial seed(alg.ctx(), Side::op);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!c.elements[0][j].is_zero()) seed.add_term(basis[j], c.elements[0][j]);
    }
    out.push_back({std::move(seed), c.start_degree, c.length});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const JordanString& a, const JordanString& b) { return a.length > b.length; });
  return out;
}

JordanReport jordan_consistency(const ApolarAlgebra& alg, const Polynomial& ell,
                                int generic_trials, std::uint64_t seed, bool with_strings) {
  require_linear(alg, ell);
  JordanReport rep;
  rep.ell = ell;
  rep.rank_sequence = power_rank_sequence(alg, ell);
  rep.partition = jordan_type(alg, ell);
  if (with_strings) rep.strings = pre_jordan_strings(alg, ell);
  rep.is_wlp_element = wlp_test(alg, ell);
  rep.is_slp_element = slp_test(alg, ell).is_strong_lefschetz;

  // Sampled stand-in for the generic Jordan type: dominance-maximal type over
  // the trials. True genericity is not certifiable by finite sampling.
  Rng rng(seed);
  Partition best;
  for (int t = 0; t < generic_trials; ++t) {
    Partition cand = jordan_type(alg, random_linear_form(alg.ctx(), rng, 10));
    if (best.empty() || dominance_le(best, cand)) best = cand;
  }
  rep.sampled_generic = best;

  const auto& hf = alg.hilbert_function();
  int sperner = sperner_number(hf);
  if ((static_cast<int>(rep.partition.size()) == sperner) != rep.is_wlp_element) {
    throw std::logic_error("jordan_consistency: parts count vs Sperner number disagrees with WLP");
  }
  if ((rep.partition == conjugate_partition(hf)) != rep.is_slp_element) {
    throw std::logic_error("jordan_consistency: conjugate Hilbert function disagrees with SLP");
  }
  if (!dominance_le(rep.partition, rep.sampled_generic)) {
    throw std::logic_error("jordan_consistency: Jordan type not dominated by the sampled generic type");
  }
  return rep;
}

}  // namespace gorenlab
