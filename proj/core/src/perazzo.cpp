#include "gorenlab/perazzo.hpp"

#include <stdexcept>

#include "gorenlab/combinatorics.hpp"
#include "gorenlab/rng.hpp"

namespace gorenlab {

namespace {

constexpr std::uint64_t kJacobianSeed = 0xA11CE5EEDull;

bool uses_only_base_vars(const Polynomial& q, int n) {
  for (const auto& [mono, c] : q.terms()) {
    for (int i = 0; i <= n; ++i) {
      if (mono[static_cast<std::size_t>(i)] != 0) return false;
    }
  }
  return true;
}

// Exact linear-independence test: rank of the coefficient matrix of the p_i.
bool linearly_independent(const std::vector<Polynomial>& p, int d, int n, int m) {
  auto monos = monomials_of_degree(static_cast<std::size_t>(n + 1 + m), d - 1);
  // Only base-variable monomials can occur; collect indices once.
  std::vector<Monomial> base_monos;
  for (const auto& mono : monos) {
    bool base = true;
    for (int i = 0; i <= n; ++i) {
      if (mono[static_cast<std::size_t>(i)] != 0) base = false;
    }
    if (base) base_monos.push_back(mono);
  }
  QMatrix coeffs(p.size(), base_monos.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = 0; j < base_monos.size(); ++j) {
      coeffs(i, j) = p[i].coeff(base_monos[j]);
    }
  }
  return coeffs.rank() == p.size();
}

/*
 * Jacobian criterion in characteristic zero: the p_i are algebraically
 * dependent iff their Jacobian in the base variables is everywhere
 * rank-deficient. A single full-rank rational point certifies independence;
 * five deficient seeded points accept dependence.
 */
bool jacobian_rank_deficient(const PerazzoForm& pf) {
  std::size_t nv = pf.ctx->nvars();
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& pi : pf.p) {
    std::vector<Polynomial> row;
    for (int j = 0; j < pf.m; ++j) {
      std::size_t var = static_cast<std::size_t>(pf.n + 1 + j);
      row.push_back(diff_apply(Monomial::variable(nv, var), pi));
    }
    jac.push_back(std::move(row));
  }
  Rng rng(kJacobianSeed);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rational> point(nv);
    for (auto& x : point) x = rng.coefficient(10);
    QMatrix j(pf.p.size(), static_cast<std::size_t>(pf.m));
    for (std::size_t r = 0; r < jac.size(); ++r) {
      for (std::size_t c = 0; c < jac[r].size(); ++c) j(r, c) = jac[r][c].evaluate(point);
    }
    if (j.rank() > static_cast<std::size_t>(pf.n)) return false;
  }
  return true;
}

}  // namespace

Ctx perazzo_context(int n, int m) { return VariableContext::split(n, m); }

PerazzoForm build_perazzo(int n, int m, int d, std::vector<Polynomial> p, Polynomial G) {
  if (n < 2 || m < 2) throw std::invalid_argument("build_perazzo: n and m must be >= 2");
  if (d < 3) throw std::invalid_argument("build_perazzo: degree must be >= 3");
  if (static_cast<int>(p.size()) != n + 1) {
    throw std::invalid_argument("build_perazzo: expected n+1 polynomials");
  }

  PerazzoForm pf;
  pf.n = n;
  pf.m = m;
  pf.d = d;
  pf.ctx = p.front().ctx();
  if (pf.ctx->nvars() != static_cast<std::size_t>(n + 1 + m)) {
    throw std::invalid_argument("build_perazzo: context size does not match n and m");
  }

  for (const auto& pi : p) {
    if (!pi.ctx()->same_as(*pf.ctx) || pi.side() != Side::form) {
      throw std::invalid_argument("build_perazzo: mismatched polynomial context");
    }
    if (pi.is_zero() || !pi.is_homogeneous() || pi.total_degree() != d - 1) {
      throw std::invalid_argument("build_perazzo: each p_i must be homogeneous of degree d-1");
    }
    if (!uses_only_base_vars(pi, n)) {
      throw std::invalid_argument("build_perazzo: p_i may use only the base variables");
    }
  }
  if (!G.is_zero()) {
    if (!G.ctx()->same_as(*pf.ctx) || G.side() != Side::form || !G.is_homogeneous() ||
        G.total_degree() != d || !uses_only_base_vars(G, n)) {
      throw std::invalid_argument("build_perazzo: G must be homogeneous of degree d in the base variables");
    }
  } else {
    G = Polynomial(pf.ctx, Side::form);
  }

  if (!linearly_independent(p, d, n, m)) {
    throw std::invalid_argument("build_perazzo: the p_i are linearly dependent");
  }

  pf.p = std::move(p);
  pf.G = std::move(G);
  pf.F = pf.G;
  for (int i = 0; i <= n; ++i) {
    pf.F = pf.F + Polynomial::variable(pf.ctx, Side::form, static_cast<std::size_t>(i)) * pf.p[i];
  }

  if (n + 1 <= m && !jacobian_rank_deficient(pf)) {
    throw std::invalid_argument(
        "build_perazzo: the p_i are algebraically independent (full-rank Jacobian)");
  }
  return pf;
}

PerazzoForm build_perazzo(int n, int m, int d, const std::vector<std::string>& p_texts,
                          const std::string& g_text) {
  Ctx ctx = perazzo_context(n, m);
  std::vector<Polynomial> p;
  p.reserve(p_texts.size());
  for (const auto& t : p_texts) p.push_back(parse_poly(t, ctx, Side::form));
  Polynomial G = g_text.empty() ? Polynomial(ctx, Side::form) : parse_poly(g_text, ctx, Side::form);
  return build_perazzo(n, m, d, std::move(p), std::move(G));
}

PerazzoForm perazzo_from_form(int n, int m, const Polynomial& F) {
  if (F.is_zero() || !F.is_homogeneous()) {
    throw std::invalid_argument("perazzo_from_form: nonzero homogeneous form expected");
  }
  int d = F.total_degree();
  Ctx ctx = F.ctx();
  std::size_t nv = ctx->nvars();
  if (nv != static_cast<std::size_t>(n + 1 + m)) {
    throw std::invalid_argument("perazzo_from_form: context size does not match n and m");
  }
  std::vector<Polynomial> p(n + 1, Polynomial(ctx, Side::form));
  Polynomial G(ctx, Side::form);
  for (const auto& [mono, c] : F.terms()) {
    int coeff_deg = 0, coeff_var = -1;
    for (int i = 0; i <= n; ++i) {
      coeff_deg += mono[static_cast<std::size_t>(i)];
      if (mono[static_cast<std::size_t>(i)] > 0) coeff_var = i;
    }
    if (coeff_deg == 0) {
      G.add_term(mono, c);
    } else if (coeff_deg == 1) {
      std::vector<int> e = mono.exponents();
      e[static_cast<std::size_t>(coeff_var)] = 0;
      p[static_cast<std::size_t>(coeff_var)].add_term(Monomial(std::move(e)), c);
    } else {
      throw std::invalid_argument("perazzo_from_form: coefficient variables occur with degree > 1");
    }
  }
  return build_perazzo(n, m, d, std::move(p), std::move(G));
}

PerazzoForm normal_form(NormalFormVariant variant, int d, const Rational& lambda) {
  if (d < 5) throw std::invalid_argument("normal_form: degree must be >= 5");
  Ctx ctx = perazzo_context(2, 2);
  auto mono = [&](int ue, int ve) {
    return Polynomial::term(ctx, Side::form, Monomial({0, 0, 0, ue, ve}), Rational(1));
  };
  std::vector<Polynomial> p;
  switch (variant) {
    case NormalFormVariant::i:
      p = {mono(d - 1, 0), mono(d - 2, 1), mono(d - 3, 2)};
      break;
    case NormalFormVariant::ii:
      p = {mono(d - 1, 0), mono(d - 2, 1), mono(0, d - 1)};
      break;
    case NormalFormVariant::iii: {
      if (lambda.is_zero()) throw std::invalid_argument("normal_form: lambda must be nonzero");
      Polynomial mid = (mono(1, 0) + mono(0, 1) * lambda).pow(static_cast<unsigned>(d - 1));
      p = {mono(d - 1, 0), std::move(mid), mono(0, d - 1)};
      break;
    }
  }
  return build_perazzo(2, 2, d, std::move(p), Polynomial(ctx, Side::form));
}

NormalFormVariant parse_variant(const std::string& text) {
  if (text == "i") return NormalFormVariant::i;
  if (text == "ii") return NormalFormVariant::ii;
  if (text == "iii") return NormalFormVariant::iii;
  throw std::invalid_argument("unknown normal form variant '" + text + "' (expected i, ii, or iii)");
}

std::string variant_name(NormalFormVariant v) {
  switch (v) {
    case NormalFormVariant::i: return "i";
    case NormalFormVariant::ii: return "ii";
    case NormalFormVariant::iii: return "iii";
  }
  return "?";
}

PerazzoForm random_perazzo_threefold(int d, std::uint64_t seed, int coeff_bound) {
  if (d < 5) throw std::invalid_argument("random_perazzo_threefold: degree must be >= 5");
  if (coeff_bound < 1) throw std::invalid_argument("random_perazzo_threefold: bound must be >= 1");
  Ctx ctx = perazzo_context(2, 2);
  Rng rng(seed);
  auto random_binary = [&](int degree) {
    Polynomial q(ctx, Side::form);
    for (int i = 0; i <= degree; ++i) {
      q.add_term(Monomial({0, 0, 0, degree - i, i}), rng.coefficient(coeff_bound));
    }
    return q;
  };
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::vector<Polynomial> p{random_binary(d - 1), random_binary(d - 1), random_binary(d - 1)};
    Polynomial G = random_binary(d);
    bool nonzero = true;
    for (const auto& pi : p) {
      if (pi.is_zero()) nonzero = false;
    }
    if (!nonzero) continue;
    try {
      return build_perazzo(2, 2, d, std::move(p), std::move(G));
    } catch (const std::invalid_argument&) {
      continue;  // linearly dependent draw; resample
    }
  }
  throw std::runtime_error("random_perazzo_threefold: exhausted retries (bound too small)");
}

bool wlp_predicate(const HilbertVector& hf, int d) {
  int count = 0;
  for (int h : hf) {
    if (h == d + 2) ++count;
  }
  return count <= 1;
}

bool lefschetz_element_predicate(NormalFormVariant variant, const Rational& lambda,
                                 const Polynomial& ell) {
  if (ell.side() != Side::op || ell.is_zero() || ell.total_degree() != 1) {
    throw std::invalid_argument("lefschetz_element_predicate: nonzero linear form expected");
  }
  std::size_t nv = ell.ctx()->nvars();
  if (nv != 5) throw std::invalid_argument("lefschetz_element_predicate: threefold context expected");
  Rational b0 = ell.coeff(Monomial::variable(nv, 3));
  Rational b1 = ell.coeff(Monomial::variable(nv, 4));
  switch (variant) {
    case NormalFormVariant::i:
      return !b0.is_zero();
    case NormalFormVariant::ii:
      return !b0.is_zero() && !b1.is_zero();
    case NormalFormVariant::iii:
      return !b0.is_zero() && !b1.is_zero() && !(b0 + lambda * b1).is_zero();
  }
  return false;
}

PerazzoCoefficients extract_coefficients(const PerazzoForm& pf) {
  if (pf.n != 2 || pf.m != 2) {
    throw std::invalid_argument("extract_coefficients: threefold (n = m = 2) expected");
  }
  PerazzoCoefficients out;
  out.d = pf.d;
  auto unpack = [&](const Polynomial& q, int degree) {
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) {
      Rational raw = q.coeff(Monomial({0, 0, 0, degree - i, i}));
      v[static_cast<std::size_t>(i)] = raw / Rational(binomial(degree, i));
    }
    return v;
  };
  out.a = unpack(pf.p[0], pf.d - 1);
  out.b = unpack(pf.p[1], pf.d - 1);
  out.c = unpack(pf.p[2], pf.d - 1);
  out.g = unpack(pf.G, pf.d);
  return out;
}

PerazzoForm threefold_from_coefficients(const PerazzoCoefficients& coeffs) {
  Ctx ctx = perazzo_context(2, 2);
  int d = coeffs.d;
  auto pack = [&](const std::vector<Rational>& v, int degree) {
    Polynomial q(ctx, Side::form);
    for (int i = 0; i <= degree; ++i) {
      q.add_term(Monomial({0, 0, 0, degree - i, i}),
                 v[static_cast<std::size_t>(i)] * Rational(binomial(degree, i)));
    }
    return q;
  };
  return build_perazzo(2, 2, d, {pack(coeffs.a, d - 1), pack(coeffs.b, d - 1), pack(coeffs.c, d - 1)},
                       pack(coeffs.g, d));
}

namespace {

QMatrix hankel(const std::vector<Rational>& v, int d, int width) {
  // rows r = 0..d-width: (v_r, ..., v_{r+width-1}); for the G block the same
  // with the vector one entry longer.
  int rows = static_cast<int>(v.size()) - width + 1;
  QMatrix h(static_cast<std::size_t>(rows), static_cast<std::size_t>(width));
  (void)d;
  for (int r = 0; r < rows; ++r) {
    for (int j = 0; j < width; ++j) {
      h(static_cast<std::size_t>(r), static_cast<std::size_t>(j)) =
          v[static_cast<std::size_t>(r + j)];
    }
  }
  return h;
}

}  // namespace

BlockMatrices block_matrices(const PerazzoForm& pf) {
  PerazzoCoefficients co = extract_coefficients(pf);
  BlockMatrices bm;
  bm.a2 = hankel(co.a, pf.d, 2);
  bm.b2 = hankel(co.b, pf.d, 2);
  bm.c2 = hankel(co.c, pf.d, 2);
  bm.a3 = hankel(co.a, pf.d, 3);
  bm.b3 = hankel(co.b, pf.d, 3);
  bm.c3 = hankel(co.c, pf.d, 3);
  bm.a4 = hankel(co.a, pf.d, 4);
  bm.b4 = hankel(co.b, pf.d, 4);
  bm.c4 = hankel(co.c, pf.d, 4);
  bm.g2 = hankel(co.g, pf.d, 3);
  bm.g3 = hankel(co.g, pf.d, 4);
  const QMatrix m2blocks[] = {bm.a2, bm.b2, bm.c2};
  const QMatrix m3blocks[] = {bm.a3, bm.b3, bm.c3};
  bm.m2 = QMatrix::hcat(m2blocks);
  bm.m3 = QMatrix::hcat(m3blocks);
  const QMatrix n2blocks[] = {bm.a3, bm.b3, bm.c3};
  const QMatrix n3blocks[] = {bm.a4, bm.b4, bm.c4};
  bm.n2 = QMatrix::vcat(n2blocks);
  bm.n3 = QMatrix::vcat(n3blocks);
  const QMatrix n2pblocks[] = {bm.a3, bm.b3, bm.c3, bm.g2};
  const QMatrix n3pblocks[] = {bm.a4, bm.b4, bm.c4, bm.g3};
  bm.n2_prime = QMatrix::vcat(n2pblocks);
  bm.n3_prime = QMatrix::vcat(n3pblocks);
  return bm;
}

RankBoundsReport hf_rank_bounds_check(const PerazzoForm& pf) {
  BlockMatrices bm = block_matrices(pf);
  HilbertVector hf = hilbert_function(pf.F);
  RankBoundsReport rep;
  rep.d = pf.d;
  rep.h2 = hf.at(2);
  rep.h3 = hf.at(3);
  rep.rank_m2 = bm.m2.rank();
  rep.rank_m3 = bm.m3.rank();
  rep.rank_n2 = bm.n2.rank();
  rep.rank_n3 = bm.n3.rank();
  rep.rank_n2_prime = bm.n2_prime.rank();
  rep.rank_n3_prime = bm.n3_prime.rank();
  rep.h2_within_bounds = rep.rank_m2 + rep.rank_n2 <= static_cast<std::size_t>(rep.h2) &&
                         static_cast<std::size_t>(rep.h2) <= rep.rank_m2 + rep.rank_n2_prime;
  rep.h3_within_bounds = rep.rank_m3 + rep.rank_n3 <= static_cast<std::size_t>(rep.h3) &&
                         static_cast<std::size_t>(rep.h3) <= rep.rank_m3 + rep.rank_n3_prime;
  rep.n3_prime_at_most_4 = rep.rank_n3_prime <= 4;
  return rep;
}

}  // namespace gorenlab
