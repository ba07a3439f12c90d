#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gdl/grobner.hpp"
#include "gdl/presentation.hpp"

using namespace gdl;

namespace {

FreeElement FE(const ContextPtr& ctx, const std::vector<std::string>& comps) {
  FreeElement e(ctx);
  for (size_t i = 0; i < comps.size(); ++i) {
    auto p = parse_polynomial(ctx, comps[i]);
    if (!p.is_zero()) e.set_component(static_cast<int>(i), p);
  }
  return e;
}

ModuleOrder order_with(const std::vector<int>& twists) {
  ModuleOrder o;
  o.twists = twists;
  return o;
}

// All monomials with given fiber degree and base degree, as full monomials.
std::vector<Monomial> bidegree_monomials(const Context& ctx, int xi_deg, int x_deg) {
  std::vector<Monomial> out;
  Context fiber_only(0, ctx.fiber_vars());
  Context base_only(0, ctx.base_vars());
  for (auto& f : fiber_monomials_of_degree(fiber_only, xi_deg)) {
    for (auto& b : fiber_monomials_of_degree(base_only, x_deg)) {
      std::vector<int> exps(ctx.total_vars(), 0);
      for (int i = 0; i < ctx.base_vars(); ++i) exps[i] = b[i];
      for (int i = 0; i < ctx.fiber_vars(); ++i) exps[ctx.base_vars() + i] = f[i];
      out.emplace_back(std::move(exps));
    }
  }
  return out;
}

// Independent membership oracle: degree-by-degree dense linear algebra over Q.
// Requires e and all gens bihomogeneous (xi- and x-homogeneous).
bool oracle_member(const FreeElement& e, const std::vector<FreeElement>& gens,
                   const std::vector<int>& twists) {
  const ContextPtr& ctx = e.context();
  auto deg = e.degree(twists);
  REQUIRE(deg.has_value());
  int x_deg = -1;
  for (const auto& [c, p] : e.components()) {
    auto xd = p.x_degree();
    REQUIRE(xd.has_value());
    if (x_deg < 0) x_deg = *xd;
    REQUIRE(x_deg == *xd);
  }
  // coordinates: (component, full monomial) -> index
  std::map<std::pair<int, std::vector<int>>, int> coord;
  auto vec_of = [&](const FreeElement& v) {
    QVec q;
    for (const auto& [c, p] : v.components())
      for (const auto& [mono, coef] : p.terms()) {
        auto key = std::make_pair(c, mono.exps());
        auto it = coord.find(key);
        if (it == coord.end()) it = coord.emplace(key, static_cast<int>(coord.size())).first;
        q[it->second] = coef;
      }
    return q;
  };
  QReducer span;
  for (const auto& g : gens) {
    auto gdeg = g.degree(twists);
    if (!gdeg) continue;
    int gx = -1;
    for (const auto& [c, p] : g.components()) gx = *p.x_degree();
    for (auto& mu : bidegree_monomials(*ctx, *deg - *gdeg, x_deg - gx)) {
      FreeElement mg = g.mul_monomial(mu);
      span.insert(vec_of(mg));
    }
  }
  return span.in_span(vec_of(e));
}

}  // namespace

TEST_CASE("monomial ideal is its own auto-reduced basis") {
  auto ctx = make_context(0, 2);
  auto gens = std::vector<FreeElement>{FE(ctx, {"u1"}), FE(ctx, {"u2"})};
  auto gb = buchberger(gens, order_with({0}));
  CHECK(gb.gens.size() == 2);
  CHECK(normal_form(FE(ctx, {"u1*u2"}), gb).is_zero());
}

TEST_CASE("GB of {u1^2, u1*u2 + u2^2} contains u2^3") {
  auto ctx = make_context(0, 2);
  auto gens = std::vector<FreeElement>{FE(ctx, {"u1^2"}), FE(ctx, {"u1*u2 + u2^2"})};
  // independent oracle first: u2^3 is in the ideal, u2^2 is not
  CHECK(oracle_member(FE(ctx, {"u2^3"}), gens, {0}));
  CHECK(!oracle_member(FE(ctx, {"u2^2"}), gens, {0}));

  auto gb = buchberger(gens, order_with({0}));
  bool has_u2cubed = false;
  for (const auto& g : gb.gens)
    if (g == FE(ctx, {"u2^3"})) has_u2cubed = true;
  CHECK(has_u2cubed);
  CHECK(normal_form(FE(ctx, {"u2^3"}), gb).is_zero());
}

TEST_CASE("Koszul relations of {u1..un} are already a GB") {
  auto ctx = make_context(0, 3);
  // relations u_i e_j - u_j e_i in A^3 with twists all 1 (e_i stands for u_i)
  std::vector<FreeElement> kos;
  kos.push_back(FE(ctx, {"u2", "-u1", "0"}));
  kos.push_back(FE(ctx, {"u3", "0", "-u1"}));
  kos.push_back(FE(ctx, {"0", "u3", "-u2"}));
  auto gb = buchberger(kos, order_with({1, 1, 1}));
  CHECK(gb.gens.size() == 3);
}

TEST_CASE("normal form: membership, unit outside irrelevant ideal, idempotence") {
  auto ctx = make_context(0, 3);
  std::vector<FreeElement> gens{FE(ctx, {"u1"}), FE(ctx, {"u2"}), FE(ctx, {"u3"})};
  auto gb = buchberger(gens, order_with({0}));
  CHECK(normal_form(FE(ctx, {"u1*u2^2 - u3"}), gb).is_zero());
  auto one = FE(ctx, {"1"});
  CHECK(normal_form(one, gb) == one);

  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial p(ctx);
    for (int t = 0; t < 4; ++t) {
      Monomial mono(ctx->total_vars());
      for (int v = 0; v < 3; ++v) mono[v] = static_cast<int>(rng() % 3);
      p.add_term(mono, Rational(static_cast<long>(rng() % 5) - 2));
    }
    FreeElement e(ctx, 0, p);
    auto nf1 = normal_form(e, gb);
    CHECK(normal_form(nf1, gb) == nf1);
  }
}

TEST_CASE("syzygies of a regular sequence pair") {
  auto ctx = make_context(0, 2);
  std::vector<FreeElement> gens{FE(ctx, {"u1"}), FE(ctx, {"u2"})};
  auto syz = syzygies(gens, order_with({0}));
  REQUIRE(syz.size() >= 1);
  // the syzygy module is spanned by (u2, -u1)
  FreeElement expected(ctx);
  expected.set_component(0, parse_polynomial(ctx, "u2"));
  expected.set_component(1, parse_polynomial(ctx, "-u1"));
  bool found = false;
  for (const auto& s : syz) {
    if (s == expected || s == expected * Rational(-1)) found = true;
    // every syzygy annihilates the generators
    FreeElement sum(ctx);
    sum += gens[0] * Rational(0);
    Polynomial acc(ctx);
    acc += s.component(0) * parse_polynomial(ctx, "u1");
    acc += s.component(1) * parse_polynomial(ctx, "u2");
    CHECK(acc.is_zero());
  }
  CHECK(found);
}

TEST_CASE("syzygies of the Koszul relations give the next Koszul step") {
  auto ctx = make_context(0, 3);
  std::vector<FreeElement> kos;
  kos.push_back(FE(ctx, {"u2", "-u1", "0"}));
  kos.push_back(FE(ctx, {"u3", "0", "-u1"}));
  kos.push_back(FE(ctx, {"0", "u3", "-u2"}));
  auto syz = syzygies(kos, order_with({1, 1, 1}));
  // rank-1 kernel spanned by (u3, -u2, u1): check every syzygy is a multiple
  // and that at least one nonzero syzygy appears
  REQUIRE(!syz.empty());
  FreeElement gen(ctx);
  gen.set_component(0, parse_polynomial(ctx, "u3"));
  gen.set_component(1, parse_polynomial(ctx, "-u2"));
  gen.set_component(2, parse_polynomial(ctx, "u1"));
  auto gb = buchberger({gen}, order_with({2, 2, 2}));
  bool nonzero_seen = false;
  for (const auto& s : syz) {
    if (!s.is_zero()) nonzero_seen = true;
    CHECK(normal_form(s, gb).is_zero());
  }
  CHECK(nonzero_seen);
}

TEST_CASE("syzygies of a principal module on a domain are empty") {
  auto ctx = make_context(1, 1);
  std::vector<FreeElement> gens{FE(ctx, {"x1^3*u1^4"})};
  auto syz = syzygies(gens, order_with({0}));
  for (const auto& s : syz) CHECK(s.is_zero());
}

TEST_CASE("member_with_coefficients certificates") {
  auto ctx = make_context(0, 2);
  std::vector<FreeElement> gens{FE(ctx, {"u1"}), FE(ctx, {"u2"})};
  auto cert = member_with_coefficients(FE(ctx, {"u1*u2"}), gens, order_with({0}));
  REQUIRE(cert.has_value());
  Polynomial acc(ctx);
  acc += (*cert)[0] * parse_polynomial(ctx, "u1");
  acc += (*cert)[1] * parse_polynomial(ctx, "u2");
  CHECK(acc == parse_polynomial(ctx, "u1*u2"));

  CHECK(!member_with_coefficients(FE(ctx, {"1"}), gens, order_with({0})).has_value());
}

TEST_CASE("certificate for f*x1 against degree-2 monomials, 4 variables") {
  auto ctx = make_context(4, 0);
  // degree-2 monomials of R = Q[x1..x4]
  std::vector<FreeElement> gens;
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      Monomial mono(ctx->total_vars());
      mono[i] += 1;
      mono[j] += 1;
      gens.push_back(FreeElement(ctx, 0, Polynomial(ctx, mono)));
    }
  auto f = parse_polynomial(ctx, "x1^2 + x2^2 + x3^2 + x4^2");
  auto target = FreeElement(ctx, 0, f * parse_polynomial(ctx, "x1"));
  auto cert = member_with_coefficients(target, gens, order_with({0}));
  REQUIRE(cert.has_value());
  Polynomial acc(ctx);
  for (size_t i = 0; i < gens.size(); ++i) acc += (*cert)[i] * gens[i].component(0);
  CHECK(acc == target.component(0));
  for (const auto& c : *cert)
    if (!c.is_zero()) CHECK(c.x_degree() == 1);
}

TEST_CASE("membership soundness against the linear-algebra oracle") {
  auto ctx = make_context(0, 2);
  std::mt19937_64 rng(555);
  auto random_homog_elt = [&](const std::vector<int>& twists, int deg) {
    FreeElement e(ctx);
    for (size_t c = 0; c < twists.size(); ++c) {
      for (auto& mono : fiber_monomials_of_degree(*ctx, deg - twists[c]))
        e.add_term(static_cast<int>(c), mono, Rational(static_cast<long>(rng() % 5) - 2));
    }
    return e;
  };
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<int> twists{0, static_cast<int>(rng() % 3)};
    std::vector<FreeElement> gens;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < count; ++i) {
      auto g = random_homog_elt(twists, 1 + static_cast<int>(rng() % 3));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    auto gb = buchberger(gens, order_with(twists));
    for (int probe = 0; probe < 4; ++probe) {
      auto e = random_homog_elt(twists, 1 + static_cast<int>(rng() % 4));
      if (e.is_zero()) continue;
      bool by_gb = normal_form(e, gb).is_zero();
      bool by_oracle = oracle_member(e, gens, twists);
      CHECK(by_gb == by_oracle);
    }
  }
}

TEST_CASE("syzygy exactness: matrix composition and slice-wise kernels") {
  auto ctx = make_context(0, 2);
  std::mt19937_64 rng(777);
  auto random_homog_elt = [&](const std::vector<int>& twists, int deg) {
    FreeElement e(ctx);
    for (size_t c = 0; c < twists.size(); ++c)
      for (auto& mono : fiber_monomials_of_degree(*ctx, deg - twists[c]))
        e.add_term(static_cast<int>(c), mono, Rational(static_cast<long>(rng() % 5) - 2));
    return e;
  };
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<int> twists{0, 1};
    std::vector<FreeElement> gens;
    for (int i = 0; i < 3; ++i) {
      auto g = random_homog_elt(twists, 1 + static_cast<int>(rng() % 3));
      if (!g.is_zero()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    auto syz = syzygies(gens, order_with(twists));
    std::vector<int> gen_degs;
    for (const auto& g : gens) gen_degs.push_back(*g.degree(twists));

    // composition is exactly zero
    for (const auto& s : syz) {
      FreeElement image(ctx);
      for (const auto& [i, coef] : s.components()) {
        for (const auto& [mono, c] : coef.terms()) image.axpy(c, mono, gens[i]);
      }
      CHECK(image.is_zero());
      CHECK(s.degree(gen_degs).has_value());  // gradedness of syzygies
    }

    // slice-wise: syzygy columns span the full kernel of the slice matrix
    GradedFreeModule f0(twists), f1(gen_degs);
    PolyMatrix phi = PolyMatrix::from_columns(ctx, f0.rank(), gens);
    Presentation pres(ctx, f0, f1, phi);
    GradedFreeModule fs;
    for (const auto& s : syz) fs.twists.push_back(*s.degree(gen_degs));
    PolyMatrix psi = PolyMatrix::from_columns(ctx, f1.rank(), syz);
    Presentation spres(ctx, f1, fs, psi);
    for (int d = 0; d <= 6; ++d) {
      SliceModule phis = slice(pres, d);
      SliceModule syzs = slice(spres, d);
      // dim ker(phi_d) = dim F1_d - rank(phi_d)
      int f1_dim = static_cast<int>(slice_basis(*ctx, f1, d).size());
      int ker_dim = f1_dim - qrank(rational_columns(phis));
      int syz_span = qrank(rational_columns(syzs));
      CHECK(ker_dim == syz_span);
    }
  }
}

TEST_CASE("buchberger output is deterministic for a fixed input ordering") {
  auto ctx = make_context(0, 3);
  std::vector<FreeElement> gens{FE(ctx, {"u1*u2 - u3^2"}), FE(ctx, {"u2^2 + u1*u3"}),
                                FE(ctx, {"u1^2"})};
  auto gb1 = buchberger(gens, order_with({0}));
  auto gb2 = buchberger(gens, order_with({0}));
  REQUIRE(gb1.gens.size() == gb2.gens.size());
  for (size_t i = 0; i < gb1.gens.size(); ++i) CHECK(gb1.gens[i] == gb2.gens[i]);
}

TEST_CASE("empty input yields empty basis") {
  auto gb = buchberger({}, order_with({}));
  CHECK(gb.gens.empty());
}
