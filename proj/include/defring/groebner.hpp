#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "defring/polynomial.hpp"

// Buchberger's algorithm over the localization Z_(l) (and, through the same
// template, over F_l). Division uses term divisibility: x^a with coefficient
// c divides x^b with coefficient d when a <= b componentwise and v(c) <= v(d).
// Remainders are fully reduced: a surviving coefficient under a head monomial
// is the canonical integer representative modulo the head coefficient, which
// makes normal forms and the reduced basis of an ideal unique.

namespace defring {

struct GroebnerError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Ops>
bool term_divides(const VarContext& ctx, const typename BasicPoly<Ops>::Term& divisor,
                  const typename BasicPoly<Ops>::Term& dividend) {
  return mono_divides(divisor.mono, dividend.mono) &&
         Ops::coeff_divides(ctx, divisor.coeff, dividend.coeff);
}

template <class Ops>
struct DivisionResult {
  BasicPoly<Ops> remainder;
  std::vector<BasicPoly<Ops>> cofactors;  // f = sum cofactor[i]*g[i] + remainder
};

// Normal form of f against the listed reducers, taken in order. The head
// term of the working polynomial is eliminated by the first reducer whose
// head term-divides it; when only the monomial divides, the coefficient is
// lowered to its canonical representative modulo the smallest applicable
// head coefficient and the term retires to the remainder.
template <class Ops>
DivisionResult<Ops> divide(const BasicPoly<Ops>& f,
                           const std::vector<BasicPoly<Ops>>& reducers) {
  using P = BasicPoly<Ops>;
  const VarContext& ctx = f.context();
  DivisionResult<Ops> out;
  out.remainder = P::zero(f.ctx());
  out.cofactors.assign(reducers.size(), P::zero(f.ctx()));

  P p = f;
  while (!p.is_zero()) {
    const auto head = p.head();

    size_t weak = reducers.size();
    size_t strong = reducers.size();
    long strong_val = 0;
    for (size_t i = 0; i < reducers.size(); ++i) {
      const P& g = reducers[i];
      if (g.is_zero() || !mono_divides(g.head_monomial(), head.mono)) continue;
      if (Ops::coeff_divides(ctx, g.head_coeff(), head.coeff)) {
        weak = i;
        break;
      }
      long v = Ops::coeff_val(ctx, g.head_coeff());
      if (strong == reducers.size() || v < strong_val) {
        strong = i;
        strong_val = v;
      }
    }

    if (weak < reducers.size()) {
      const P& g = reducers[weak];
      auto q = Ops::div(ctx, head.coeff, g.head_coeff());
      Monomial qm = mono_quot(head.mono, g.head_monomial());
      out.cofactors[weak] = out.cofactors[weak] + P::term(f.ctx(), qm, q);
      p = p - g.term_scaled(qm, q);
      continue;
    }

    if (strong < reducers.size()) {
      auto rep = Ops::strong_rep(ctx, head.coeff, strong_val);
      auto excess = Ops::sub(ctx, head.coeff, rep);
      if (!Ops::is_zero(excess)) {
        const P& g = reducers[strong];
        auto q = Ops::div(ctx, excess, g.head_coeff());
        Monomial qm = mono_quot(head.mono, g.head_monomial());
        out.cofactors[strong] = out.cofactors[strong] + P::term(f.ctx(), qm, q);
        p = p - g.term_scaled(qm, q);
        continue;
      }
    }

    out.remainder = out.remainder + P::term(f.ctx(), head.mono, head.coeff);
    p = p - P::term(f.ctx(), head.mono, head.coeff);
  }
  return out;
}

template <class Ops>
BasicPoly<Ops> normal_form(const BasicPoly<Ops>& f,
                           const std::vector<BasicPoly<Ops>>& reducers) {
  return divide(f, reducers).remainder;
}

// S-polynomial. The coefficient lcm in Z_(l) is l^max(v,v'); over F_l it is 1.
template <class Ops>
BasicPoly<Ops> spoly(const BasicPoly<Ops>& f, const BasicPoly<Ops>& g) {
  using P = BasicPoly<Ops>;
  const VarContext& ctx = f.context();
  Monomial m = mono_lcm(f.head_monomial(), g.head_monomial());
  auto c = Ops::coeff_lcm(ctx, f.head_coeff(), g.head_coeff());
  P left = f.term_scaled(mono_quot(m, f.head_monomial()),
                         Ops::div(ctx, c, f.head_coeff()));
  P right = g.term_scaled(mono_quot(m, g.head_monomial()),
                          Ops::div(ctx, c, g.head_coeff()));
  return left - right;
}

struct BuchbergerOptions {
  bool use_chain_criterion = false;
  size_t max_basis = 4096;
};

namespace detail {

// Product criterion, adjusted for the coefficient ring: an S-pair may be
// skipped when the head monomials are coprime and at least one head
// coefficient is a unit. Requiring the unit matters: for 3x + y and 3z + w
// the monomials x, z are coprime yet the S-polynomial wz - xy does not
// reduce to zero against the pair.
template <class Ops>
bool product_criterion(const VarContext& ctx, const BasicPoly<Ops>& f,
                       const BasicPoly<Ops>& g) {
  if (!mono_coprime(f.head_monomial(), g.head_monomial())) return false;
  return Ops::is_unit(ctx, f.head_coeff()) || Ops::is_unit(ctx, g.head_coeff());
}

}  // namespace detail

// Unit-normalize: divide by the unit part of the head coefficient, leaving
// head coefficient l^v (so 1 over F_l).
template <class Ops>
BasicPoly<Ops> normalize_head(const BasicPoly<Ops>& f) {
  if (f.is_zero()) return f;
  auto u = Ops::normal_unit(f.context(), f.head_coeff());
  return f.scaled(Ops::div(f.context(), Ops::one(), u));
}

// The reduced basis of a self-reducing family: drop elements whose head
// term is term-divisible by another's, fully reduce each tail against the
// rest, normalize heads, sort ascending by head monomial.
template <class Ops>
std::vector<BasicPoly<Ops>> reduce_basis(std::vector<BasicPoly<Ops>> basis) {
  using P = BasicPoly<Ops>;
  if (basis.empty()) return basis;
  const VarContext& ctx = basis.front().context();

  std::vector<P> kept;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || basis[j].is_zero()) continue;
      if (!term_divides<Ops>(ctx, basis[j].head(), basis[i].head())) continue;
      // Mutually dividing heads: keep the earlier element.
      if (term_divides<Ops>(ctx, basis[i].head(), basis[j].head()) && i < j)
        continue;
      redundant = true;
    }
    if (!redundant) kept.push_back(basis[i]);
  }

  for (auto& g : kept) g = normalize_head(g);

  std::vector<P> reduced = kept;
  for (size_t i = 0; i < kept.size(); ++i) {
    std::vector<P> others;
    for (size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    reduced[i] = normal_form(kept[i], others);
    if (reduced[i].is_zero() || reduced[i].head_monomial() != kept[i].head_monomial())
      throw GroebnerError("reduce_basis: head term lost during tail reduction");
  }

  std::sort(reduced.begin(), reduced.end(), [&](const P& a, const P& b) {
    int c = ctx.compare(a.head_monomial(), b.head_monomial());
    if (c != 0) return c < 0;
    return Ops::coeff_val(ctx, a.head_coeff()) < Ops::coeff_val(ctx, b.head_coeff());
  });
  return reduced;
}

template <class Ops>
std::vector<BasicPoly<Ops>> buchberger(const std::vector<BasicPoly<Ops>>& gens,
                                       const BuchbergerOptions& opts = {}) {
  using P = BasicPoly<Ops>;
  std::vector<P> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(g);
  if (basis.empty()) return basis;
  const VarContext& ctx = basis.front().context();
  for (const auto& g : basis)
    if (!g.context().same(ctx))
      throw GroebnerError("buchberger: generators from different contexts");

  struct Pair {
    size_t i, j;
    Monomial lcm;
  };
  auto pair_before = [&](const Pair& a, const Pair& b) {
    long da = mono_degree(a.lcm), db = mono_degree(b.lcm);
    if (da != db) return da < db;
    int c = ctx.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };

  std::vector<Pair> queue;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      queue.push_back(
          Pair{i, j, mono_lcm(basis[i].head_monomial(), basis[j].head_monomial())});
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

  auto chain_skip = [&](const Pair& pr) {
    if (!opts.use_chain_criterion) return false;
    for (size_t k = 0; k < basis.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!mono_divides(basis[k].head_monomial(), pr.lcm)) continue;
      if (!Ops::coeff_divides(
              ctx, basis[k].head_coeff(),
              Ops::coeff_lcm(ctx, basis[pr.i].head_coeff(), basis[pr.j].head_coeff())))
        continue;
      bool ik_done = mono_lcm(basis[pr.i].head_monomial(), basis[k].head_monomial()) != pr.lcm;
      bool jk_done = mono_lcm(basis[pr.j].head_monomial(), basis[k].head_monomial()) != pr.lcm;
      if (ik_done && jk_done) return true;
    }
    return false;
  };

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_before);
    Pair pr = *it;
    queue.erase(it);

    if (detail::product_criterion(ctx, basis[pr.i], basis[pr.j])) continue;
    if (chain_skip(pr)) continue;

    P s = spoly(basis[pr.i], basis[pr.j]);
    P r = normal_form(s, basis);
    if (r.is_zero()) continue;

    basis.push_back(normalize_head(r));
    if (basis.size() > opts.max_basis)
      throw GroebnerError("buchberger: basis size limit exceeded");
    push_pairs_for(basis.size() - 1);
  }

  return reduce_basis(std::move(basis));
}

// Certify the Gröbner property directly: every S-polynomial reduces to zero.
// No pair criteria are applied.
template <class Ops>
bool is_groebner(const std::vector<BasicPoly<Ops>>& basis) {
  std::vector<BasicPoly<Ops>> gens;
  for (const auto& g : basis)
    if (!g.is_zero()) gens.push_back(g);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!normal_form(spoly(gens[i], gens[j]), gens).is_zero()) return false;
  return true;
}

}  // namespace defring
