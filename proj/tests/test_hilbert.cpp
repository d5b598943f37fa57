#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "defring/hilbert.hpp"

using namespace defring;

namespace {
std::vector<ResiduePoly> parse_res(const CtxPtr& ctx,
                                   const std::vector<std::string>& ss) {
  std::vector<ResiduePoly> out;
  for (const auto& s : ss) out.push_back(parse_residue_poly(ctx, s));
  return out;
}
}  // namespace

TEST_CASE("reduction to the residue field") {
  auto ctx = make_context({"x", "y"}, OrderKind::lex, 3);
  CHECK(reduce_mod_l(parse_poly(ctx, "4*x - 3*y + 7/2")).to_string() ==
        "x + 2");
  CHECK(reduce_mod_l(parse_poly(ctx, "3*x + 9")).is_zero());
}

TEST_CASE("polynomial ring without relations") {
  auto ctx = make_context({"x", "y", "z"}, OrderKind::grevlex, 3);
  auto data = hilbert_data(std::vector<ResiduePoly>{}, ctx);
  // h(d) = C(d+2, 2)
  CHECK(data.values[0] == 1);
  CHECK(data.values[4] == 15);
  CHECK(data.coeffs == std::vector<Rat>{Rat(1), Rat(3) / 2, Rat(1) / 2});
  CHECK(data.poly_degree == 2);
  CHECK(data.dimension == 3);
  CHECK(data.multiplicity == 1);
}

TEST_CASE("hypersurface and artinian quotients") {
  auto ctx = make_context({"x", "y"}, OrderKind::grevlex, 5);
  auto quad = hilbert_data(parse_res(ctx, {"x^2 + y^2"}), ctx);
  CHECK(quad.dimension == 1);
  CHECK(quad.multiplicity == 2);

  auto artin = hilbert_data(parse_res(ctx, {"x^2", "y^3"}), ctx);
  CHECK(artin.poly_degree == -1);
  CHECK(artin.dimension == 0);
  CHECK(artin.multiplicity == 0);
  CHECK(artin.values[1] == 2);
  CHECK(artin.values[3] == 1);  // only x*y^2 survives
  CHECK(artin.values[5] == 0);
}

TEST_CASE("homogeneity is enforced") {
  auto ctx = make_context({"x", "y"}, OrderKind::grevlex, 3);
  CHECK_THROWS_WITH(hilbert_data(parse_res(ctx, {"x^2 - y"}), ctx),
                    "Hilbert requires homogeneous ideal");
}

TEST_CASE("horizon stabilization guard") {
  auto ctx = make_context({"x", "y"}, OrderKind::grevlex, 3);
  auto gens = parse_res(ctx, {"x^12"});
  CHECK_THROWS_WITH(hilbert_data(gens, ctx, 12, 4),
                    "hilbert horizon too small to stabilize the Hilbert function");
  auto data = hilbert_data(gens, ctx, 16, 4);
  CHECK(data.poly_degree == 0);
  CHECK(data.coeffs == std::vector<Rat>{Rat(12)});
  CHECK(data.dimension == 1);
  CHECK(data.multiplicity == 12);
}

TEST_CASE("matrix-pair relation ideal over F_3") {
  auto ctx = make_context({"X", "Y", "A", "B", "C", "F"}, OrderKind::lex, 3);
  auto gens = parse_res(ctx, {"A^2 + B*C", "F^2 + 4*X*Y", "A*F + 2*C*X",
                              "A*F + 2*B*Y", "2*A*X - B*F", "2*A*Y - C*F"});
  auto data = hilbert_data(gens, ctx);
  CHECK(data.values[1] == 6);
  CHECK(data.values[2] == 15);
  CHECK(data.dimension == 3);
  CHECK(data.multiplicity == 4);
  CHECK(data.coeffs == std::vector<Rat>{Rat(1), Rat(3), Rat(2)});
}

TEST_CASE("coordinate-plane ideal") {
  auto ctx = make_context({"A", "B", "C", "F", "X", "Y"}, OrderKind::lex, 3);
  auto data = hilbert_data(parse_res(ctx, {"A", "B", "C"}), ctx);
  CHECK(data.dimension == 3);
  CHECK(data.multiplicity == 1);
}

TEST_CASE("random monomial ideals agree with inclusion-exclusion") {
  std::mt19937 rng(987654);
  std::uniform_int_distribution<int> nv(2, 4);
  std::uniform_int_distribution<int> ng(1, 5);
  std::uniform_int_distribution<int> expo(0, 3);
  std::vector<std::string> names = {"x", "y", "z", "w"};
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = nv(rng);
    auto ctx = make_context(
        std::vector<std::string>(names.begin(), names.begin() + n),
        OrderKind::grevlex, 3);
    std::vector<Monomial> heads;
    int k = ng(rng);
    for (int i = 0; i < k; ++i) {
      Monomial m(n, 0);
      for (size_t j = 0; j < n; ++j) m[j] = expo(rng);
      if (mono_degree(m) > 0) heads.push_back(m);
    }
    for (long d = 0; d <= 7; ++d) {
      long got = standard_monomial_count(ctx, heads, d);
      // Inclusion-exclusion over subsets of heads, counting multiples.
      long divisible = 0;
      for (size_t mask = 1; mask < (size_t{1} << heads.size()); ++mask) {
        Monomial l(n, 0);
        for (size_t j = 0; j < heads.size(); ++j)
          if (mask & (size_t{1} << j)) l = mono_lcm(l, heads[j]);
        long rem = d - mono_degree(l);
        if (rem < 0) continue;
        // monomials of degree rem in n vars
        long ways = 1;
        for (long i = 1; i < static_cast<long>(n); ++i)
          ways = ways * (rem + i) / i;
        divisible += (__builtin_popcountll(mask) % 2 == 1) ? ways : -ways;
      }
      long total = 1;
      for (long i = 1; i < static_cast<long>(n); ++i)
        total = total * (d + i) / i;
      CHECK(got == total - divisible);
    }
  }
}
