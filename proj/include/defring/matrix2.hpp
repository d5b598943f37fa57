#pragma once

#include <utility>

#include "defring/polynomial.hpp"

// 2x2 matrices with polynomial entries, plus the reduction of t^q modulo a
// quadratic characteristic polynomial.

namespace defring {

struct Mat2 {
  Poly a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity(const CtxPtr& ctx) {
    return {Poly::from_long(ctx, 1), Poly::zero(ctx), Poly::zero(ctx),
            Poly::from_long(ctx, 1)};
  }

  static Mat2 zero(const CtxPtr& ctx) {
    return {Poly::zero(ctx), Poly::zero(ctx), Poly::zero(ctx), Poly::zero(ctx)};
  }

  Poly trace() const { return a + d; }
  Poly det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }

  friend Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }

  friend Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }

  Mat2 scaled(const Poly& s) const { return {s * a, s * b, s * c, s * d}; }

  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
};

// Coefficients (c1, c0) with t^q = c1*t + c0 modulo t^2 - tr*t + det,
// computed by square-and-multiply on linear remainders:
// (a1*t + b1)(a2*t + b2) = (a1*b2 + a2*b1 + a1*a2*tr)*t + (b1*b2 - a1*a2*det).
inline std::pair<Poly, Poly> charpoly_power(long q, const Poly& tr,
                                            const Poly& det) {
  if (q < 1) throw PolyError("charpoly_power expects q >= 1");
  const CtxPtr& ctx = tr.ctx();
  auto mul = [&](const std::pair<Poly, Poly>& u, const std::pair<Poly, Poly>& v) {
    Poly tt = u.first * v.first;
    return std::make_pair(u.first * v.second + v.first * u.second + tt * tr,
                          u.second * v.second - tt * det);
  };
  std::pair<Poly, Poly> acc{Poly::zero(ctx), Poly::from_long(ctx, 1)};  // 1
  std::pair<Poly, Poly> base{Poly::from_long(ctx, 1), Poly::zero(ctx)};  // t
  long e = q;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

}  // namespace defring
