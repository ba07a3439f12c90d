#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdl/local_cohomology.hpp"

using namespace gdl;

namespace {

Presentation a_mod_irrelevant(const ContextPtr& ctx) {
  const int n = ctx->fiber_vars();
  GradedFreeModule f0({0}), f1(std::vector<int>(n, 1));
  PolyMatrix phi(ctx, 1, n);
  for (int j = 0; j < n; ++j) phi.at(0, j) = Polynomial(ctx, fiber_var(*ctx, j));
  return Presentation(ctx, f0, f1, phi);
}

Presentation free_A(const ContextPtr& ctx, std::vector<int> twists = {0}) {
  return Presentation::free_module(ctx, GradedFreeModule(std::move(twists)));
}

Presentation example_41(int w) {
  auto ctx = make_context(1, 1);
  GradedFreeModule f0({-w}), f1({1});
  PolyMatrix phi(ctx, 1, 1);
  Monomial mono(ctx->total_vars());
  mono[0] = w;
  mono[1] = w + 1;
  phi.at(0, 0) = Polynomial(ctx, mono);
  return Presentation(ctx, f0, f1, phi);
}

long long binom(long long a, long long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  long long r = 1;
  for (long long i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("top local cohomology of free modules: inverse monomial counts") {
  auto ctx = make_context(0, 2);
  GradedFreeModule a({0});
  CHECK(top_lc_of_free(ctx, a, -2).ambient_rank() == 1);
  CHECK(top_lc_of_free(ctx, a, -4).ambient_rank() == 3);
  CHECK(top_lc_of_free(ctx, a, -1).ambient_rank() == 0);
  CHECK(top_lc_of_free(ctx, a, 0).ambient_rank() == 0);
  // twisted summand A(-t latex: twist entry t): dims C(t - p - 1, n - 1)
  for (int t : {-2, 0, 3})
    for (int p = -8; p <= 2; ++p) {
      GradedFreeModule f({t});
      long long want = (t - p >= 2) ? binom(t - p - 1, 1) : 0;
      CHECK(top_lc_of_free(ctx, f, p).ambient_rank() == want);
    }
}

TEST_CASE("resolution route on A/I: Gamma only") {
  for (int n = 1; n <= 3; ++n) {
    auto ctx = make_context(0, n);
    auto g = a_mod_irrelevant(ctx);
    for (int i = 0; i <= n; ++i)
      for (int p = -4; p <= 2; ++p)
        CHECK(qdim(lc_resolution_route(g, i, p)) == ((i == 0 && p == 0) ? 1 : 0));
  }
}

TEST_CASE("resolution route on a free module matches the top formula") {
  auto ctx = make_context(0, 2);
  auto a = free_A(ctx);
  for (int p = -6; p <= 1; ++p) {
    CHECK(qdim(lc_resolution_route(a, 2, p)) == top_lc_of_free(ctx, a.f0(), p).ambient_rank());
    CHECK(qdim(lc_resolution_route(a, 0, p)) == 0);
    CHECK(qdim(lc_resolution_route(a, 1, p)) == 0);
  }
}

TEST_CASE("koszul limit route: A/I stabilizes immediately") {
  auto ctx = make_context(0, 2);
  auto g = a_mod_irrelevant(ctx);
  RouteDiagnostics diag;
  SliceModule s = lc_koszul_limit_route(g, 0, 0, 8, &diag);
  CHECK(qdim(s) == 1);
  CHECK(diag.stabilized_k == 2);
  CHECK(qdim(lc_koszul_limit_route(g, 1, 0, 8)) == 0);
  CHECK(qdim(lc_koszul_limit_route(g, 2, 0, 8)) == 0);
}

TEST_CASE("koszul limit route on the free module reproduces the top formula") {
  auto ctx = make_context(0, 2);
  auto a = free_A(ctx);
  CHECK(qdim(lc_koszul_limit_route(a, 2, -2, 10)) == 1);
  CHECK(qdim(lc_koszul_limit_route(a, 2, -4, 12)) == 3);
  CHECK(qdim(lc_koszul_limit_route(a, 0, -2, 10)) == 0);
  CHECK(qdim(lc_koszul_limit_route(a, 1, -2, 10)) == 0);
}

TEST_CASE("cech route reproduces the P^1 cohomology table") {
  auto ctx = make_context(0, 2);
  auto a = free_A(ctx);
  for (int p = -6; p <= 6; ++p) {
    int want0 = p >= 0 ? p + 1 : 0;
    int want1 = p <= -2 ? -p - 1 : 0;
    CHECK(qdim(cech_sheaf_route(a, 0, p, 20)) == want0);
    CHECK(qdim(cech_sheaf_route(a, 1, p, 20)) == want1);
  }
}

TEST_CASE("cech route on A/I vanishes (empty support on P)") {
  auto ctx = make_context(0, 2);
  auto g = a_mod_irrelevant(ctx);
  for (int p = -3; p <= 3; ++p) {
    CHECK(qdim(cech_sheaf_route(g, 0, p, 10)) == 0);
    CHECK(qdim(cech_sheaf_route(g, 1, p, 10)) == 0);
  }
}

TEST_CASE("stabilization cap raises a loud error") {
  auto ctx = make_context(0, 2);
  auto a = free_A(ctx);
  CHECK_THROWS_AS(cech_sheaf_route(a, 0, 4, 3), StabilizationCapError);
}

TEST_CASE("example module over Q[x]: local cohomology regimes") {
  const int w = 2;
  auto g = example_41(w);
  // Gamma_I: a rank-one free piece for p in [-w, 0], zero otherwise
  for (int p = -5; p <= 3; ++p) {
    RInvariants g0 = invariants(lc_resolution_route(g, 0, p));
    RInvariants g1 = invariants(lc_resolution_route(g, 1, p));
    if (p >= -w && p <= 0) {
      CHECK(g0 == RInvariants{1, {}});
    } else {
      CHECK(g0 == RInvariants{0, {}});
    }
    if (p < -w) {
      CHECK(g1 == RInvariants{0, {w}});
    } else {
      CHECK(g1 == RInvariants{0, {}});
    }
  }
  // the same through the koszul limit
  for (int p : {-4, -1, 0, 1}) {
    CHECK(invariants(lc_koszul_limit_route(g, 0, p, 16)) ==
          invariants(lc_resolution_route(g, 0, p)));
    CHECK(invariants(lc_koszul_limit_route(g, 1, p, 16)) ==
          invariants(lc_resolution_route(g, 1, p)));
  }
  // direct torsion kernel is the x^w line inside the slice (the (4.1.2) shape)
  RouteDiagnostics diag;
  HomologyAt ker = gamma_torsion_slice(g, -1, 16, &diag);
  REQUIRE(!ker.pres.gen_twists.empty());
  CHECK(*std::min_element(ker.pres.gen_twists.begin(), ker.pres.gen_twists.end()) == w);
  CHECK(invariants(node_as_slice(base_ring_of(g.context()), ker.pres)) == RInvariants{1, {}});
  HomologyAt none = gamma_torsion_slice(g, 1, 16, &diag);
  CHECK(node_is_zero(base_ring_of(g.context()), none.pres));
}

TEST_CASE("cech route on the Q[x] module is R/(x^w) in degree zero for every p") {
  const int w = 2;
  auto g = example_41(w);
  for (int p = -4; p <= 2; ++p) {
    CHECK(invariants(cech_sheaf_route(g, 0, p, 16)) == RInvariants{0, {w}});
  }
}

TEST_CASE("les_check on A with n=2: regimes and exactness") {
  auto ctx = make_context(0, 2);
  auto a = free_A(ctx);
  LesReport rep = les_check(a, -5, 3, 20);
  CHECK(rep.exact);
  CHECK(rep.top_regime);
  CHECK(rep.bottom_regime);
  for (const auto& node : rep.nodes) {
    CHECK(node.exact);
    CHECK(node.gamma.is_zero());  // free module: no torsion
    if (node.p >= 0) {
      CHECK(node.beta_bijective);
      CHECK(node.h1.is_zero());
    }
    if (node.p <= -2) {
      // H^2_I(A)_p = R^1 pi_* O(p): dimension -p-1
      REQUIRE(node.higher.size() == 1);
      CHECK(node.higher[0].dim == -node.p - 1);
      CHECK(node.module.is_zero());
      CHECK(node.gamma_bijective);
    }
  }
}

TEST_CASE("les_check reproduces the three regimes of the Q[x] example") {
  const int w = 2;
  auto g = example_41(w);
  LesReport rep = les_check(g, -5, 3, 18);
  CHECK(rep.exact);
  for (const auto& node : rep.nodes) {
    CHECK(node.exact);
    // pi_* is R/(x^w) for every p
    CHECK(node.direct_image.inv == RInvariants{0, {w}});
    if (node.p > 0) {
      CHECK(node.alpha_zero);
      CHECK(node.beta_bijective);
      CHECK(node.gamma_zero);
      CHECK(node.module.inv == RInvariants{0, {w}});
    } else if (node.p >= -w) {
      CHECK(!node.alpha_zero);
      CHECK(node.gamma.inv == RInvariants{1, {}});
      CHECK(node.module.inv == RInvariants{1, {}});
      CHECK(node.gamma_zero);
    } else {
      CHECK(node.alpha_zero);
      CHECK(node.beta_zero);
      CHECK(node.gamma_bijective);
      CHECK(node.module.is_zero());
      CHECK(node.h1.inv == RInvariants{0, {w}});
    }
  }
  CHECK(rep.top_regime);
  CHECK(rep.bottom_regime);
}

TEST_CASE("les_check on a graded free module: Gamma vanishes, H1 is coker beta") {
  auto ctx = make_context(0, 2);
  auto f = free_A(ctx, {0, -1});
  LesReport rep = les_check(f, -4, 2, 18);
  CHECK(rep.exact);
  for (const auto& node : rep.nodes) CHECK(node.gamma.is_zero());
}

TEST_CASE("route table: all three routes agree on a quotient module") {
  auto ctx = make_context(0, 2);
  // A/(u1^2, u1*u2)
  GradedFreeModule f0({0}), f1({2, 2});
  PolyMatrix phi(ctx, 1, 2);
  Monomial m1(2), m2(2);
  m1[0] = 2;
  m2[0] = 1;
  m2[1] = 1;
  phi.at(0, 0) = Polynomial(ctx, m1);
  phi.at(0, 1) = Polynomial(ctx, m2);
  Presentation g(ctx, f0, f1, phi);
  LocalCohomologyTable table = local_cohomology_table(g, "all", -6, 3, 20);
  CHECK(table.routes_agree);
  LesReport rep = les_check(g, -6, 3, 20);
  CHECK(rep.exact);
}

TEST_CASE("n = 1: cech route is the stabilized colimit (point projective space)") {
  auto ctx = make_context(0, 1);
  auto a = free_A(ctx);
  for (int p = -3; p <= 3; ++p) CHECK(qdim(cech_sheaf_route(a, 0, p, 12)) == 1);
  auto g = a_mod_irrelevant(ctx);  // A/(u1)
  for (int p = -2; p <= 2; ++p) CHECK(qdim(cech_sheaf_route(g, 0, p, 12)) == 0);
}
