#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gdl/presentation.hpp"

using namespace gdl;

namespace {

Polynomial P(const ContextPtr& ctx, const std::string& s) { return parse_polynomial(ctx, s); }

// deterministic small random polynomial (coefficients in [-3,3], few terms)
Polynomial random_poly(const ContextPtr& ctx, std::mt19937_64& rng, int max_terms = 4,
                       int max_exp = 2) {
  Polynomial p(ctx);
  int terms = 1 + static_cast<int>(rng() % max_terms);
  for (int t = 0; t < terms; ++t) {
    Monomial mono(ctx->total_vars());
    for (int v = 0; v < ctx->total_vars(); ++v) mono[v] = static_cast<int>(rng() % (max_exp + 1));
    long c = static_cast<long>(rng() % 7) - 3;
    p.add_term(mono, Rational(c));
  }
  return p;
}

}  // namespace

TEST_CASE("difference of squares") {
  auto ctx = make_context(1, 1);
  auto l = P(ctx, "x1 + u1");
  auto r = P(ctx, "x1 - u1");
  CHECK(l * r == P(ctx, "x1^2 - u1^2"));
}

TEST_CASE("multiplication by zero absorbs") {
  auto ctx = make_context(0, 2);
  auto z = Polynomial(ctx);
  CHECK((P(ctx, "u1") * z).is_zero());
}

TEST_CASE("f * x1 for the sum-of-squares polynomial, n = 4 base variables") {
  auto ctx = make_context(4, 1);
  auto f = P(ctx, "x1^2 + x2^2 + x3^2 + x4^2");
  auto g = f * P(ctx, "x1");
  CHECK(g.term_count() == 4);
  for (const auto& [mono, c] : g.terms()) {
    CHECK(mono.x_degree(*ctx) == 3);
    CHECK(mono.xi_degree(*ctx) == 0);
  }
}

TEST_CASE("xi_degree on homogeneous and mixed polynomials") {
  auto ctx = make_context(1, 3);
  CHECK(P(ctx, "x1^3*u2^2").xi_degree() == 2);
  CHECK(!P(ctx, "x1 + u1").xi_degree().has_value());
  CHECK(P(ctx, "u1*u2 - u3^2").xi_degree() == 2);
}

TEST_CASE("ring axioms on random polynomials, exactly") {
  auto ctx = make_context(1, 2);
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 40; ++i) {
    auto a = random_poly(ctx, rng);
    auto b = random_poly(ctx, rng);
    auto c = random_poly(ctx, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b == b + a);
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("xi_degree is additive on homogeneous factors") {
  auto ctx = make_context(2, 2);
  std::mt19937_64 rng(99);
  auto random_homog = [&](int d) {
    Polynomial p(ctx);
    for (auto& mono : fiber_monomials_of_degree(*ctx, d)) {
      Monomial full = mono;
      for (int v = 0; v < ctx->base_vars(); ++v) full[v] = static_cast<int>(rng() % 3);
      p.add_term(full, Rational(static_cast<long>(rng() % 7) - 3));
    }
    return p;
  };
  int checked = 0;
  for (int i = 0; i < 60 && checked < 20; ++i) {
    auto a = random_homog(static_cast<int>(rng() % 4));
    auto b = random_homog(static_cast<int>(rng() % 4));
    if (a.is_zero() || b.is_zero()) continue;
    auto ab = a * b;
    if (ab.is_zero()) continue;
    ++checked;
    CHECK(ab.xi_degree() == *a.xi_degree() + *b.xi_degree());
  }
  CHECK(checked >= 10);
}

TEST_CASE("monomial order: total, multiplicative, 1 minimal") {
  auto ctx = make_context(1, 2);
  MonomialOrder ord;
  std::mt19937_64 rng(7);
  auto random_mono = [&](int cap) {
    Monomial mono(ctx->total_vars());
    for (int v = 0; v < ctx->total_vars(); ++v) mono[v] = static_cast<int>(rng() % (cap + 1));
    return mono;
  };
  for (int i = 0; i < 200; ++i) {
    Monomial a = random_mono(3), b = random_mono(3), w = random_mono(2);
    int c = ord.compare(a, b, *ctx);
    CHECK(c == -ord.compare(b, a, *ctx));
    if (a == b) CHECK(c == 0);
    if (c != 0) CHECK((a == b) == false);
    if (c < 0) CHECK(ord.compare(a * w, b * w, *ctx) < 0);
    if (!a.is_one()) CHECK(ord.compare(unit_monomial(*ctx), a, *ctx) < 0);
  }
  // both order kinds
  MonomialOrder total{OrderKind::TotalDegRevLex};
  for (int i = 0; i < 100; ++i) {
    Monomial a = random_mono(3), b = random_mono(3), w = random_mono(2);
    int c = total.compare(a, b, *ctx);
    if (c < 0) CHECK(total.compare(a * w, b * w, *ctx) < 0);
  }
}

TEST_CASE("polynomial text round trip") {
  auto ctx = make_context(2, 2);
  auto p = P(ctx, "3/2*x1^2*u2 - u1*u2 + 7");
  CHECK(parse_polynomial(ctx, p.str()) == p);
  CHECK(P(ctx, "  3/2 * x1^2*u2-u1 *u2+ 7 ") == p);
}

TEST_CASE("mismatched contexts are rejected") {
  auto a = make_context(1, 1);
  auto b = make_context(0, 2);
  CHECK_THROWS_AS(P(a, "x1") * P(b, "u1"), InputError);
}

TEST_CASE("sign twist is an involution negating odd degrees only") {
  auto ctx = make_context(1, 2);
  auto p = P(ctx, "x1*u1 + u1*u2 - 2*u2 + 5");
  auto t = p.sign_twist();
  CHECK(t == P(ctx, "-x1*u1 + u1*u2 + 2*u2 + 5"));
  CHECK(t.sign_twist() == p);
}
