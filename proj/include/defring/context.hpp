#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "defring/scalar.hpp"

namespace defring {

struct ContextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class OrderKind { lex, grevlex };

inline std::string order_name(OrderKind k) {
  return k == OrderKind::lex ? "lex" : "grevlex";
}

inline OrderKind order_from_name(std::string_view s) {
  if (s == "lex") return OrderKind::lex;
  if (s == "grevlex") return OrderKind::grevlex;
  throw ContextError("unknown order '" + std::string(s) + "'");
}

// Dense exponent vector aligned with the context's variable list.
using Monomial = std::vector<int>;

inline long mono_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0L);
}

inline bool mono_is_one(const Monomial& m) {
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// b / a, defined when a divides b.
inline Monomial mono_quot(const Monomial& b, const Monomial& a) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[i] - a[i];
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

inline bool valid_var_name(std::string_view s) {
  if (s.empty()) return false;
  if (!isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  size_t i = 1;
  while (i < s.size() && (isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
    ++i;
  while (i < s.size() && s[i] == '\'') ++i;  // primes allowed as a suffix
  return i == s.size();
}

inline bool is_odd_prime(long l) {
  if (l < 3 || l % 2 == 0) return false;
  for (long d = 3; d * d <= l; d += 2)
    if (l % d == 0) return false;
  return true;
}

// Ordered variable list plus monomial order plus the prime l.
// The first listed variable is the greatest.
class VarContext {
 public:
  VarContext(std::vector<std::string> vars, OrderKind order, long prime)
      : vars_(std::move(vars)), order_(order), prime_(prime) {
    if (vars_.empty()) throw ContextError("context needs at least one variable");
    if (vars_.size() > 16) throw ContextError("context supports at most 16 variables");
    std::set<std::string> seen;
    for (const auto& v : vars_) {
      if (!valid_var_name(v))
        throw ContextError("invalid variable name '" + v + "'");
      if (!seen.insert(v).second)
        throw ContextError("duplicate variable name '" + v + "'");
    }
    if (!is_odd_prime(prime_))
      throw ContextError("context prime must be an odd prime, got " +
                         std::to_string(prime_));
  }

  size_t size() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(size_t i) const { return vars_.at(i); }
  OrderKind order() const { return order_; }
  long prime() const { return prime_; }

  long index_of(std::string_view name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<long>(i);
    return -1;
  }

  bool same(const VarContext& o) const {
    return vars_ == o.vars_ && order_ == o.order_ && prime_ == o.prime_;
  }

  // -1 if a < b, 0 if equal, +1 if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    if (order_ == OrderKind::lex) {
      for (size_t i = 0; i < vars_.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      }
      return 0;
    }
    long da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = vars_.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  Monomial one() const { return Monomial(vars_.size(), 0); }

 private:
  std::vector<std::string> vars_;
  OrderKind order_;
  long prime_;
};

using CtxPtr = std::shared_ptr<const VarContext>;

inline CtxPtr make_context(std::vector<std::string> vars, OrderKind order,
                           long prime) {
  return std::make_shared<const VarContext>(std::move(vars), order, prime);
}

}  // namespace defring
