#pragma once

#include <vector>

#include "defring/groebner.hpp"

// Hilbert function and Hilbert polynomial of a homogeneous quotient over the
// residue field F_l, with dimension and multiplicity read off the fitted
// polynomial.

namespace defring {

struct HilbertError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline ResiduePoly reduce_mod_l(const Poly& p) {
  ResiduePoly out = ResiduePoly::zero(p.ctx());
  long l = p.context().prime();
  for (const auto& t : p.terms()) {
    long c = residue(t.coeff, l);
    if (c != 0) out = out + ResiduePoly::term(p.ctx(), t.mono, c);
  }
  return out;
}

inline std::vector<ResiduePoly> reduce_mod_l(const std::vector<Poly>& gens) {
  std::vector<ResiduePoly> out;
  for (const auto& g : gens) {
    ResiduePoly r = reduce_mod_l(g);
    if (!r.is_zero()) out.push_back(r);
  }
  return out;
}

namespace detail {

template <class F>
void walk_monomials(Monomial& m, size_t i, long remaining, const F& visit) {
  if (i + 1 == m.size()) {
    m[i] = static_cast<int>(remaining);
    visit(m);
    m[i] = 0;
    return;
  }
  for (long e = 0; e <= remaining; ++e) {
    m[i] = static_cast<int>(e);
    walk_monomials(m, i + 1, remaining - e, visit);
  }
  m[i] = 0;
}

}  // namespace detail

// Number of degree-d monomials outside the head-monomial ideal of the basis.
inline long standard_monomial_count(const CtxPtr& ctx,
                                    const std::vector<Monomial>& heads, long d) {
  long count = 0;
  Monomial m = ctx->one();
  detail::walk_monomials(m, 0, d, [&](const Monomial& mono) {
    for (const auto& h : heads)
      if (mono_divides(h, mono)) return;
    ++count;
  });
  return count;
}

inline long hilbert_function(const std::vector<ResiduePoly>& groebner_basis,
                             const CtxPtr& ctx, long d) {
  std::vector<Monomial> heads;
  for (const auto& g : groebner_basis)
    if (!g.is_zero()) heads.push_back(g.head_monomial());
  return standard_monomial_count(ctx, heads, d);
}

struct HilbertData {
  long horizon = 0;
  std::vector<long> values;   // values[d] for d = 0..horizon
  std::vector<Rat> coeffs;    // Hilbert polynomial, ascending powers
  long poly_degree = -1;      // -1 when the polynomial is zero
  long dimension = 0;         // Krull dimension of the graded quotient
  Int multiplicity = 0;       // leading coefficient times poly_degree!
};

namespace detail {

inline Rat eval_coeffs(const std::vector<Rat>& coeffs, long x) {
  Rat acc = 0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

// Lagrange interpolation through (xs[i], ys[i]), ascending coefficients.
inline std::vector<Rat> interpolate(const std::vector<long>& xs,
                                    const std::vector<long>& ys) {
  size_t n = xs.size();
  std::vector<Rat> acc(n, Rat(0));
  for (size_t i = 0; i < n; ++i) {
    std::vector<Rat> basis = {Rat(1)};
    Rat denom = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      basis.resize(basis.size() + 1, Rat(0));
      for (size_t k = basis.size(); k-- > 1;)
        basis[k] = basis[k - 1] - Rat(xs[j]) * basis[k];
      basis[0] = -Rat(xs[j]) * basis[0];
      denom *= Rat(xs[i]) - Rat(xs[j]);
    }
    for (size_t k = 0; k < basis.size(); ++k)
      acc[k] += Rat(ys[i]) * basis[k] / denom;
  }
  while (!acc.empty() && acc.back() == 0) acc.pop_back();
  return acc;
}

}  // namespace detail

// Tabulate the Hilbert function out to the horizon, then fit the polynomial
// that matches the tail: the fit through the last (r+1) points must also
// reproduce the preceding `window` values.
inline HilbertData hilbert_data(const std::vector<ResiduePoly>& gens,
                                const CtxPtr& ctx, long horizon = 12,
                                long window = 4) {
  for (const auto& g : gens)
    if (!g.is_homogeneous())
      throw HilbertError("Hilbert requires homogeneous ideal");
  if (horizon < window + 1)
    throw HilbertError("hilbert horizon must exceed the stability window");

  auto gb = buchberger(gens);
  std::vector<Monomial> heads;
  for (const auto& g : gb) heads.push_back(g.head_monomial());

  HilbertData out;
  out.horizon = horizon;
  for (long d = 0; d <= horizon; ++d)
    out.values.push_back(standard_monomial_count(ctx, heads, d));

  for (long r = 0; r + window <= horizon; ++r) {
    std::vector<long> xs, ys;
    for (long d = horizon - r; d <= horizon; ++d) {
      xs.push_back(d);
      ys.push_back(out.values[d]);
    }
    auto coeffs = detail::interpolate(xs, ys);
    bool ok = true;
    for (long d = horizon - r - window; d < horizon - r && ok; ++d)
      if (detail::eval_coeffs(coeffs, d) != out.values[d]) ok = false;
    if (!ok) continue;

    out.coeffs = coeffs;
    out.poly_degree = static_cast<long>(coeffs.size()) - 1;
    out.dimension = out.poly_degree + 1;
    if (out.poly_degree >= 0) {
      Rat lead = coeffs.back();
      for (long k = 2; k <= out.poly_degree; ++k) lead *= k;
      if (denominator(lead) != 1 || lead <= 0)
        throw HilbertError("hilbert polynomial has a non-integral multiplicity");
      out.multiplicity = numerator(lead);
    }
    return out;
  }
  throw HilbertError("hilbert horizon too small to stabilize the Hilbert function");
}

inline HilbertData hilbert_data(const std::vector<Poly>& gens, const CtxPtr& ctx,
                                long horizon = 12, long window = 4) {
  return hilbert_data(reduce_mod_l(gens), ctx, horizon, window);
}

}  // namespace defring
