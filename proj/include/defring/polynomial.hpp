#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "defring/context.hpp"
#include "defring/scalar.hpp"

// Multivariate polynomials over a coefficient model. Two models are used:
// DvrOps (rationals integral at the context prime l) and FpOps (the residue
// field F_l). Terms are kept strictly descending in the context order.

namespace defring {

struct PolyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DvrOps {
  using Coeff = Rat;
  static Coeff zero() { return Rat(0); }
  static Coeff one() { return Rat(1); }
  static Coeff from_long(const VarContext&, long v) { return Rat(v); }
  static bool is_zero(const Coeff& c) { return c == 0; }
  static Coeff add(const VarContext&, const Coeff& a, const Coeff& b) { return a + b; }
  static Coeff sub(const VarContext&, const Coeff& a, const Coeff& b) { return a - b; }
  static Coeff mul(const VarContext&, const Coeff& a, const Coeff& b) { return a * b; }
  static bool is_unit(const VarContext& ctx, const Coeff& c) {
    return is_unit_at(c, ctx.prime());
  }
  // Does d divide n inside Z_(l)?
  static bool coeff_divides(const VarContext& ctx, const Coeff& d, const Coeff& n) {
    if (is_zero(n)) return true;
    if (is_zero(d)) return false;
    return valuation(n, ctx.prime()) >= valuation(d, ctx.prime());
  }
  static Coeff div(const VarContext&, const Coeff& n, const Coeff& d) { return n / d; }
  // lcm up to units: l^max of the valuations.
  static Coeff coeff_lcm(const VarContext& ctx, const Coeff& a, const Coeff& b) {
    long v = std::max(valuation(a, ctx.prime()), valuation(b, ctx.prime()));
    return pow_scalar(Rat(ctx.prime()), v);
  }
  // c = normal_unit(c) * l^v; dividing by the normal unit leaves coefficient l^v.
  static Coeff normal_unit(const VarContext& ctx, const Coeff& c) {
    return unit_part(c, ctx.prime());
  }
  static long coeff_val(const VarContext& ctx, const Coeff& c) {
    return valuation(c, ctx.prime());
  }
  // Canonical representative of c modulo l^v_head: the balanced integer with
  // absolute value at most (l^v_head - 1)/2. Subtracting it leaves a multiple
  // of the head coefficient.
  static Coeff strong_rep(const VarContext& ctx, const Coeff& c, long v_head) {
    Int modulus = 1;
    for (long i = 0; i < v_head; ++i) modulus *= ctx.prime();
    return Rat(balanced_residue(c, modulus));
  }
  static Coeff parse(const VarContext& ctx, std::string_view s) {
    return parse_scalar(s, ctx.prime());
  }
  static std::string format(const Coeff& c) { return format_scalar(c); }
  static bool valid_for(const VarContext& ctx, const Coeff& c) {
    return integral_at(c, ctx.prime());
  }
};

struct FpOps {
  using Coeff = long;  // canonical representative in [0, p)
  static Coeff zero() { return 0; }
  static Coeff one() { return 1; }
  static Coeff from_long(const VarContext& ctx, long v) {
    long p = ctx.prime();
    return ((v % p) + p) % p;
  }
  static bool is_zero(const Coeff& c) { return c == 0; }
  static Coeff add(const VarContext& ctx, Coeff a, Coeff b) { return (a + b) % ctx.prime(); }
  static Coeff sub(const VarContext& ctx, Coeff a, Coeff b) {
    long p = ctx.prime();
    return ((a - b) % p + p) % p;
  }
  static Coeff mul(const VarContext& ctx, Coeff a, Coeff b) { return (a * b) % ctx.prime(); }
  static bool is_unit(const VarContext&, Coeff c) { return c != 0; }
  static bool coeff_divides(const VarContext&, Coeff d, Coeff n) {
    return n == 0 || d != 0;
  }
  static Coeff div(const VarContext& ctx, Coeff n, Coeff d) {
    return (n * mod_inverse(d, ctx.prime())) % ctx.prime();
  }
  static Coeff coeff_lcm(const VarContext&, Coeff, Coeff) { return 1; }
  static Coeff normal_unit(const VarContext&, Coeff c) { return c; }
  static long coeff_val(const VarContext&, Coeff) { return 0; }
  static Coeff strong_rep(const VarContext&, Coeff, long) { return 0; }
  static Coeff parse(const VarContext& ctx, std::string_view s) {
    Rat r = parse_scalar(s, ctx.prime());
    return residue(r, ctx.prime());
  }
  static std::string format(const Coeff& c) { return std::to_string(c); }
  static bool valid_for(const VarContext& ctx, Coeff c) {
    return 0 <= c && c < ctx.prime();
  }
};

template <class Ops>
class BasicPoly {
 public:
  using Coeff = typename Ops::Coeff;
  struct Term {
    Monomial mono;
    Coeff coeff;
  };

  BasicPoly() = default;
  explicit BasicPoly(CtxPtr ctx) : ctx_(std::move(ctx)) {}

  static BasicPoly zero(CtxPtr ctx) { return BasicPoly(std::move(ctx)); }

  static BasicPoly constant(CtxPtr ctx, Coeff c) {
    BasicPoly p(ctx);
    if (!Ops::is_zero(c)) {
      check_coeff(*ctx, c);
      p.terms_.push_back(Term{ctx->one(), std::move(c)});
    }
    return p;
  }

  static BasicPoly from_long(CtxPtr ctx, long v) {
    return constant(ctx, Ops::from_long(*ctx, v));
  }

  static BasicPoly variable(CtxPtr ctx, std::string_view name) {
    long i = ctx->index_of(name);
    if (i < 0)
      throw PolyError("unknown variable '" + std::string(name) + "'");
    Monomial m = ctx->one();
    m[i] = 1;
    BasicPoly p(ctx);
    p.terms_.push_back(Term{std::move(m), Ops::one()});
    return p;
  }

  static BasicPoly term(CtxPtr ctx, Monomial m, Coeff c) {
    BasicPoly p(ctx);
    if (!Ops::is_zero(c)) {
      check_coeff(*ctx, c);
      p.terms_.push_back(Term{std::move(m), std::move(c)});
    }
    return p;
  }

  const CtxPtr& ctx() const { return ctx_; }
  const VarContext& context() const { return *ctx_; }
  bool is_zero() const { return terms_.empty(); }
  size_t n_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& head() const {
    if (terms_.empty()) throw PolyError("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& head_monomial() const { return head().mono; }
  const Coeff& head_coeff() const { return head().coeff; }

  long degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, mono_degree(t.mono));
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = mono_degree(terms_.front().mono);
    for (const auto& t : terms_)
      if (mono_degree(t.mono) != d) return false;
    return true;
  }

  bool depends_on(size_t var_index) const {
    for (const auto& t : terms_)
      if (t.mono[var_index] > 0) return true;
    return false;
  }

  friend BasicPoly operator+(const BasicPoly& a, const BasicPoly& b) {
    a.check_compatible(b);
    BasicPoly r(a.ctx_);
    r.terms_ = merge(*a.ctx_, a.terms_, b.terms_, false);
    return r;
  }

  friend BasicPoly operator-(const BasicPoly& a, const BasicPoly& b) {
    a.check_compatible(b);
    BasicPoly r(a.ctx_);
    r.terms_ = merge(*a.ctx_, a.terms_, b.terms_, true);
    return r;
  }

  BasicPoly operator-() const {
    BasicPoly r(ctx_);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = Ops::sub(*ctx_, Ops::zero(), t.coeff);
    return r;
  }

  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    a.check_compatible(b);
    auto cmp = [ctx = a.ctx_.get()](const Monomial& x, const Monomial& y) {
      return ctx->compare(x, y) > 0;  // descending
    };
    std::map<Monomial, Coeff, decltype(cmp)> acc(cmp);
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        Monomial m = mono_mul(ta.mono, tb.mono);
        Coeff c = Ops::mul(*a.ctx_, ta.coeff, tb.coeff);
        auto it = acc.find(m);
        if (it == acc.end()) {
          if (!Ops::is_zero(c)) acc.emplace(std::move(m), std::move(c));
        } else {
          it->second = Ops::add(*a.ctx_, it->second, c);
          if (Ops::is_zero(it->second)) acc.erase(it);
        }
      }
    }
    BasicPoly r(a.ctx_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) r.terms_.push_back(Term{m, c});
    return r;
  }

  BasicPoly scaled(const Coeff& c) const {
    BasicPoly r(ctx_);
    if (Ops::is_zero(c)) return r;
    check_coeff(*ctx_, c);
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.coeff = Ops::mul(*ctx_, t.coeff, c);
    return r;
  }

  // Multiply by the single term c * x^m.
  BasicPoly term_scaled(const Monomial& m, const Coeff& c) const {
    BasicPoly r(ctx_);
    if (Ops::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back(Term{mono_mul(t.mono, m), Ops::mul(*ctx_, t.coeff, c)});
    return r;
  }

  BasicPoly pow(long e) const {
    if (e < 0) throw PolyError("pow expects a nonnegative exponent");
    BasicPoly r = from_long(ctx_, 1);
    BasicPoly b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
    if (!a.ctx_->same(*b.ctx_)) return false;
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
      if (a.terms_[i].mono != b.terms_[i].mono) return false;
      if (!(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
    }
    return true;
  }
  friend bool operator!=(const BasicPoly& a, const BasicPoly& b) {
    return !(a == b);
  }

  Coeff evaluate(const std::vector<Coeff>& point) const {
    if (point.size() != ctx_->size())
      throw PolyError("evaluate: point arity mismatch");
    Coeff total = Ops::zero();
    for (const auto& t : terms_) {
      Coeff v = t.coeff;
      for (size_t i = 0; i < point.size(); ++i)
        for (int e = 0; e < t.mono[i]; ++e) v = Ops::mul(*ctx_, v, point[i]);
      total = Ops::add(*ctx_, total, v);
    }
    return total;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
      const Term& t = terms_[i];
      std::string cs = Ops::format(t.coeff);
      bool neg = !cs.empty() && cs[0] == '-';
      std::string mag = neg ? cs.substr(1) : cs;
      if (i == 0) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      std::string vars = mono_string(t.mono);
      if (vars.empty()) {
        out += mag;
      } else if (mag == "1") {
        out += vars;
      } else {
        out += mag + "*" + vars;
      }
    }
    return out;
  }

 private:
  static void check_coeff(const VarContext& ctx, const Coeff& c) {
    if (!Ops::valid_for(ctx, c))
      throw PolyError("coefficient " + Ops::format(c) +
                      " is not admissible at prime " +
                      std::to_string(ctx.prime()));
  }

  void check_compatible(const BasicPoly& o) const {
    if (!ctx_ || !o.ctx_ || !ctx_->same(*o.ctx_))
      throw PolyError("polynomial contexts differ");
  }

  std::string mono_string(const Monomial& m) const {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ctx_->var(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
  }

  static std::vector<Term> merge(const VarContext& ctx,
                                 const std::vector<Term>& a,
                                 const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      int c = ctx.compare(a[i].mono, b[j].mono);
      if (c > 0) {
        out.push_back(a[i++]);
      } else if (c < 0) {
        Term t = b[j++];
        if (subtract) t.coeff = Ops::sub(ctx, Ops::zero(), t.coeff);
        out.push_back(std::move(t));
      } else {
        Coeff c2 = subtract ? Ops::sub(ctx, a[i].coeff, b[j].coeff)
                            : Ops::add(ctx, a[i].coeff, b[j].coeff);
        if (!Ops::is_zero(c2)) out.push_back(Term{a[i].mono, std::move(c2)});
        ++i;
        ++j;
      }
    }
    while (i < a.size()) out.push_back(a[i++]);
    while (j < b.size()) {
      Term t = b[j++];
      if (subtract) t.coeff = Ops::sub(ctx, Ops::zero(), t.coeff);
      out.push_back(std::move(t));
    }
    return out;
  }

  CtxPtr ctx_;
  std::vector<Term> terms_;
};

using Poly = BasicPoly<DvrOps>;
using ResiduePoly = BasicPoly<FpOps>;

// --- parsing ---------------------------------------------------------------
//
//   poly   := [sign] term ((""+"" | ""-"") term)*
//   term   := coeff ("*" varpow)* | varpow ("*" varpow)*
//   varpow := name ("^" posint)?
//   coeff  := int ("/" posint)?

namespace detail {

struct Token {
  enum Kind { number, name, plus, minus, star, caret, slash, end } kind;
  std::string text;
  size_t pos;
};

inline std::vector<Token> lex_poly(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() &&
             (isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      while (j < s.size() && s[j] == '\'') ++j;
      out.push_back({Token::name, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '+': k = Token::plus; break;
      case '-': k = Token::minus; break;
      case '*': k = Token::star; break;
      case '^': k = Token::caret; break;
      case '/': k = Token::slash; break;
      default:
        throw PolyError("unexpected character '" + std::string(1, c) +
                        "' at position " + std::to_string(i));
    }
    out.push_back({k, std::string(1, c), i});
    ++i;
  }
  out.push_back({Token::end, "", s.size()});
  return out;
}

}  // namespace detail

template <class Ops>
BasicPoly<Ops> parse_basic_poly(const CtxPtr& ctx, std::string_view text) {
  using P = BasicPoly<Ops>;
  auto toks = detail::lex_poly(text);
  size_t i = 0;
  auto peek = [&]() -> const detail::Token& { return toks[i]; };
  auto take = [&]() -> const detail::Token& { return toks[i++]; };
  auto fail = [&](const std::string& msg) -> void {
    throw PolyError("parse error at position " + std::to_string(peek().pos) +
                    ": " + msg + " in '" + std::string(text) + "'");
  };

  auto parse_varpow = [&]() -> P {
    const auto& t = take();
    if (t.kind != detail::Token::name) fail("expected variable name");
    if (ctx->index_of(t.text) < 0) fail("unknown variable '" + t.text + "'");
    long e = 1;
    if (peek().kind == detail::Token::caret) {
      take();
      const auto& et = take();
      if (et.kind != detail::Token::number) fail("expected exponent");
      e = std::stol(et.text);
      if (e <= 0) fail("exponent must be positive");
      if (e > 64) fail("exponent too large");
    }
    P v = P::variable(ctx, t.text);
    return v.pow(e);
  };

  auto parse_coeff = [&]() -> typename Ops::Coeff {
    std::string body = take().text;  // caller guarantees a number token
    if (peek().kind == detail::Token::slash) {
      take();
      const auto& d = take();
      if (d.kind != detail::Token::number) fail("expected denominator");
      body += "/" + d.text;
    }
    return Ops::parse(*ctx, body);
  };

  auto parse_term = [&]() -> P {
    P acc;
    if (peek().kind == detail::Token::number) {
      acc = P::constant(ctx, parse_coeff());
    } else {
      acc = parse_varpow();
    }
    while (peek().kind == detail::Token::star) {
      take();
      if (peek().kind == detail::Token::number)
        fail("coefficient must come first in a term");
      acc = acc * parse_varpow();
    }
    return acc;
  };

  P total = P::zero(ctx);
  bool negate = false;
  if (peek().kind == detail::Token::plus) {
    take();
  } else if (peek().kind == detail::Token::minus) {
    take();
    negate = true;
  }
  for (;;) {
    P t = parse_term();
    total = negate ? total - t : total + t;
    if (peek().kind == detail::Token::plus) {
      take();
      negate = false;
    } else if (peek().kind == detail::Token::minus) {
      take();
      negate = true;
    } else {
      break;
    }
  }
  if (peek().kind != detail::Token::end) fail("trailing input");
  return total;
}

inline Poly parse_poly(const CtxPtr& ctx, std::string_view text) {
  return parse_basic_poly<DvrOps>(ctx, text);
}

inline ResiduePoly parse_residue_poly(const CtxPtr& ctx, std::string_view text) {
  return parse_basic_poly<FpOps>(ctx, text);
}

}  // namespace defring
