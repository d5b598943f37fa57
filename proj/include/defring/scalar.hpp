#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

// Exact scalars for the ring Z_(l): rational numbers whose denominator is
// coprime to a fixed odd prime l. Plain rational arithmetic is total; the
// locality constraint is enforced at the points where values enter an
// l-aware computation (parsing, residue maps, term division).

namespace defring {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using DvrScalar = Rat;

struct ScalarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Sentinel for valuation(0): larger than any finite valuation in practice.
inline constexpr long val_infinity = std::numeric_limits<long>::max() / 4;

inline long valuation_int(Int n, long l) {
  if (n == 0) return val_infinity;
  long v = 0;
  Int q, r;
  for (;;) {
    boost::multiprecision::divide_qr(n, Int(l), q, r);
    if (r != 0) break;
    n = q;
    ++v;
  }
  return v;
}

// v_l(x); val_infinity for x = 0. Negative exactly when l divides the
// denominator, i.e. when x lies outside Z_(l).
inline long valuation(const Rat& x, long l) {
  if (x == 0) return val_infinity;
  return valuation_int(numerator(x), l) - valuation_int(denominator(x), l);
}

inline bool integral_at(const Rat& x, long l) {
  return x == 0 || valuation(x, l) >= 0;
}

inline bool is_unit_at(const Rat& x, long l) {
  return x != 0 && valuation(x, l) == 0;
}

// x = unit_part(x) * l^valuation(x); the unit part has valuation 0.
inline Rat unit_part(const Rat& x, long l) {
  if (x == 0) throw ScalarError("unit_part of zero");
  long v = valuation(x, l);
  Rat p(1);
  Rat li(l);
  if (v >= 0) {
    for (long i = 0; i < v; ++i) p *= li;
    return x / p;
  }
  for (long i = 0; i < -v; ++i) p *= li;
  return x * p;
}

inline Rat pow_scalar(const Rat& x, long e) {
  if (e < 0) throw ScalarError("pow_scalar expects a nonnegative exponent");
  Rat r(1), b = x;
  long k = e;
  while (k > 0) {
    if (k & 1) r *= b;
    b *= b;
    k >>= 1;
  }
  return r;
}

inline long mod_inverse(long a, long l) {
  long t = 0, nt = 1, r = l, nr = ((a % l) + l) % l;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw ScalarError("mod_inverse: argument not invertible");
  return ((t % l) + l) % l;
}

inline Int mod_inverse_big(Int a, const Int& m) {
  Int t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    Int q = r / nr;
    Int tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw ScalarError("mod_inverse_big: argument not invertible");
  return ((t % m) + m) % m;
}

// The unique integer s in [0, modulus) with x = s (mod modulus) inside Z_(l),
// for x integral at l and modulus a power of l.
inline Int canonical_residue(const Rat& x, const Int& modulus) {
  if (modulus <= 0) throw ScalarError("canonical_residue: modulus must be positive");
  Int n = numerator(x) % modulus;
  Int d = denominator(x) % modulus;
  Int s = (n * mod_inverse_big(d, modulus)) % modulus;
  return ((s % modulus) + modulus) % modulus;
}

// Balanced representative: the unique integer s with |s| <= (modulus-1)/2
// and x = s (mod modulus), for odd modulus.
inline Int balanced_residue(const Rat& x, const Int& modulus) {
  Int s = canonical_residue(x, modulus);
  if (2 * s > modulus - 1) s -= modulus;
  return s;
}

// Image of x in the prime field F_l, as a value in [0, l).
// Requires x integral at l.
inline long residue(const Rat& x, long l) {
  if (!integral_at(x, l))
    throw ScalarError("residue requires a scalar integral at l");
  if (x == 0) return 0;
  Int li(l);
  long n = static_cast<long>(numerator(x) % li);
  long d = static_cast<long>(denominator(x) % li);
  n = ((n % l) + l) % l;
  d = ((d % l) + l) % l;
  return (n * mod_inverse(d, l)) % l;
}

inline std::string format_scalar(const Rat& x) {
  std::string s = numerator(x).str();
  if (denominator(x) != 1) {
    s += "/";
    s += denominator(x).str();
  }
  return s;
}

// Textual form: optional sign, integer, optional "/" positive integer.
// Rejects values with denominator divisible by l.
inline Rat parse_scalar(std::string_view text, long l) {
  size_t i = 0, n = text.size();
  auto skip_ws = [&] {
    while (i < n && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  bool neg = false;
  if (i < n && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  skip_ws();
  auto read_digits = [&]() -> Int {
    if (i >= n || !isdigit(static_cast<unsigned char>(text[i])))
      throw ScalarError("parse_scalar: expected digits in '" +
                        std::string(text) + "'");
    Int v = 0;
    while (i < n && isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return v;
  };
  Int num = read_digits();
  Int den = 1;
  skip_ws();
  if (i < n && text[i] == '/') {
    ++i;
    skip_ws();
    den = read_digits();
    if (den == 0) throw ScalarError("parse_scalar: zero denominator");
  }
  skip_ws();
  if (i != n)
    throw ScalarError("parse_scalar: trailing characters in '" +
                      std::string(text) + "'");
  Rat r(num);
  r /= Rat(den);
  if (neg) r = -r;
  if (!integral_at(r, l))
    throw ScalarError("parse_scalar: '" + std::string(text) +
                      "' is not integral at " + std::to_string(l));
  return r;
}

}  // namespace defring
