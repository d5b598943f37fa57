#pragma once

#include <optional>
#include <string>
#include <vector>

#include "defring/groebner.hpp"

// Ideal-level operations: membership, equality, elimination, intersection,
// saturation, and the flatness certificate over Z_(l).

namespace defring {

struct IdealError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Rewrite p in another context containing all variables p actually uses.
inline Poly transport(const Poly& p, const CtxPtr& target) {
  const VarContext& from = p.context();
  std::vector<long> map(from.size());
  for (size_t i = 0; i < from.size(); ++i)
    map[i] = target->index_of(from.var(i));
  Poly out = Poly::zero(target);
  for (const auto& t : p.terms()) {
    Monomial m = target->one();
    for (size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] < 0)
        throw IdealError("variable " + from.var(i) +
                         " does not exist in the target context");
      m[static_cast<size_t>(map[i])] = t.mono[i];
    }
    out = out + Poly::term(target, std::move(m), t.coeff);
  }
  return out;
}

}  // namespace detail

class Ideal {
 public:
  Ideal(CtxPtr ctx, std::vector<Poly> gens)
      : ctx_(std::move(ctx)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (!g.context().same(*ctx_))
        throw IdealError("generator context mismatch");
  }

  static Ideal parse(const CtxPtr& ctx, const std::vector<std::string>& forms) {
    std::vector<Poly> gens;
    for (const auto& s : forms) gens.push_back(parse_poly(ctx, s));
    return Ideal(ctx, std::move(gens));
  }

  const CtxPtr& ctx() const { return ctx_; }
  const std::vector<Poly>& gens() const { return gens_; }

  const std::vector<Poly>& groebner() const {
    if (!gb_) gb_ = buchberger(gens_);
    return *gb_;
  }

  Poly reduce(const Poly& f) const { return normal_form(f, groebner()); }

  bool contains(const Poly& f) const { return reduce(f).is_zero(); }

  bool contains(const Ideal& other) const {
    for (const auto& g : other.gens_)
      if (!contains(g)) return false;
    return true;
  }

  Ideal plus(const std::vector<Poly>& extra) const {
    std::vector<Poly> gens = gens_;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return Ideal(ctx_, std::move(gens));
  }

  bool is_zero_ideal() const { return groebner().empty(); }

 private:
  CtxPtr ctx_;
  std::vector<Poly> gens_;
  mutable std::optional<std::vector<Poly>> gb_;
};

inline bool equal(const Ideal& a, const Ideal& b) {
  if (!a.ctx()->same(*b.ctx()))
    throw IdealError("cannot compare ideals from different contexts");
  return a.contains(b) && b.contains(a);
}

// Drop the named variables. Requires a lex context in which the dropped
// variables are exactly the leading block.
inline Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
  const VarContext& ctx = *I.ctx();
  if (ctx.order() != OrderKind::lex || drop.empty() || drop.size() >= ctx.size())
    throw IdealError("elimination requires lex with dropped variables first");
  for (size_t i = 0; i < drop.size(); ++i)
    if (ctx.var(i) != drop[i])
      throw IdealError("elimination requires lex with dropped variables first");

  std::vector<std::string> rest;
  for (size_t i = drop.size(); i < ctx.size(); ++i) rest.push_back(ctx.var(i));
  CtxPtr sub = make_context(rest, OrderKind::lex, ctx.prime());

  std::vector<Poly> kept;
  for (const auto& g : I.groebner()) {
    bool pure = true;
    for (size_t i = 0; i < drop.size() && pure; ++i)
      if (g.depends_on(i)) pure = false;
    if (pure) kept.push_back(detail::transport(g, sub));
  }
  return Ideal(sub, std::move(kept));
}

namespace detail {

inline CtxPtr tagged_context(const VarContext& ctx) {
  if (ctx.index_of("_t") >= 0)
    throw IdealError("context already uses the reserved variable _t");
  std::vector<std::string> vars = {"_t"};
  for (size_t i = 0; i < ctx.size(); ++i) vars.push_back(ctx.var(i));
  return make_context(vars, OrderKind::lex, ctx.prime());
}

// Eliminate _t and land back in the caller's context.
inline Ideal project_back(const Ideal& big, const CtxPtr& home) {
  Ideal cut = eliminate(big, {"_t"});
  std::vector<Poly> gens;
  for (const auto& g : cut.gens()) gens.push_back(transport(g, home));
  return Ideal(home, std::move(gens));
}

}  // namespace detail

// I cap J, via the ideal t*I + (1-t)*J in an extended lex context.
inline Ideal intersect(const Ideal& I, const Ideal& J) {
  if (!I.ctx()->same(*J.ctx()))
    throw IdealError("cannot intersect ideals from different contexts");
  CtxPtr big = detail::tagged_context(*I.ctx());
  Poly t = Poly::variable(big, "_t");
  Poly one_minus_t = Poly::from_long(big, 1) - t;
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(t * detail::transport(g, big));
  for (const auto& g : J.gens())
    gens.push_back(one_minus_t * detail::transport(g, big));
  return detail::project_back(Ideal(big, std::move(gens)), I.ctx());
}

// I : f^infinity, via I + (1 - t*f) in an extended lex context.
inline Ideal saturate_by(const Ideal& I, const Poly& f) {
  if (!f.context().same(*I.ctx()))
    throw IdealError("saturation requires a polynomial in the ideal's context");
  if (f.is_zero()) throw IdealError("cannot saturate by zero");
  CtxPtr big = detail::tagged_context(*I.ctx());
  Poly t = Poly::variable(big, "_t");
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(detail::transport(g, big));
  gens.push_back(Poly::from_long(big, 1) - t * detail::transport(f, big));
  return detail::project_back(Ideal(big, std::move(gens)), I.ctx());
}

// lambda-torsion saturation: I : l^infinity.
inline Ideal saturate_lambda(const Ideal& I) {
  return saturate_by(I, Poly::from_long(I.ctx(), I.ctx()->prime()));
}

enum class FlatKind { flat_by_units, flat_by_saturation, not_flat };

inline std::string flat_kind_name(FlatKind k) {
  switch (k) {
    case FlatKind::flat_by_units: return "flat-by-units";
    case FlatKind::flat_by_saturation: return "flat-by-saturation";
    default: return "not-flat";
  }
}

struct FlatnessCertificate {
  FlatKind kind;
  std::optional<Poly> witness;  // lambda-torsion element when not flat
  bool flat() const { return kind != FlatKind::not_flat; }
};

// The quotient by I is flat over Z_(l) exactly when it has no lambda-torsion.
// Unit head coefficients certify that directly; otherwise compare I with its
// lambda-saturation and surface a torsion witness on failure.
inline FlatnessCertificate is_flat(const Ideal& I) {
  bool all_units = true;
  for (const auto& g : I.groebner())
    if (!is_unit_at(g.head_coeff(), I.ctx()->prime())) all_units = false;
  if (all_units) return {FlatKind::flat_by_units, std::nullopt};

  Ideal sat = saturate_lambda(I);
  for (const auto& g : buchberger(sat.gens()))
    if (!I.contains(g)) return {FlatKind::not_flat, g};
  return {FlatKind::flat_by_saturation, std::nullopt};
}

}  // namespace defring
