#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gdl/presentation.hpp"

using namespace gdl;

namespace {
Presentation free_A(const ContextPtr& ctx, std::vector<int> twists = {0}) {
  return Presentation::free_module(ctx, GradedFreeModule(std::move(twists)));
}

Presentation from_text(const std::string& t) { return parse_module_text(t); }
}  // namespace

TEST_CASE("slice of A: monomial count") {
  auto ctx = make_context(0, 2);
  auto a = free_A(ctx);
  for (int d = -2; d <= 5; ++d) {
    int dim = qdim(slice(a, d));
    CHECK(dim == (d >= 0 ? d + 1 : 0));
  }
}

TEST_CASE("graded free slice dimension matches the binomial count") {
  auto ctx = make_context(0, 3);
  auto f = free_A(ctx, {-2, 0, 1});
  for (int d = -3; d <= 4; ++d) {
    long long want = 0;
    for (int t : f.f0().twists) want += fiber_monomial_count(3, d - t);
    CHECK(qdim(slice(f, d)) == want);
  }
}

TEST_CASE("shift_grading: identity, slice shift, additivity") {
  auto ctx = make_context(0, 2);
  auto a = free_A(ctx);
  CHECK(qdim(slice(shift_grading(a, 0), 2)) == qdim(slice(a, 2)));
  // A(-3) at degree 3 is A_0: rank 1
  CHECK(qdim(slice(shift_grading(a, -3), 3)) == 1);
  for (int d = -1; d <= 4; ++d) {
    CHECK(qdim(slice(shift_grading(a, -2), d)) == qdim(slice(a, d - 2)));
    auto twice = shift_grading(shift_grading(a, -1), 3);
    CHECK(qdim(slice(twice, d)) == qdim(slice(shift_grading(a, 2), d)));
  }
}

TEST_CASE("slice of A/(u1) with n=1") {
  auto g = from_text(
      "vars 0 1\n"
      "twists F0: 0\n"
      "twists F1: 1\n"
      "rel: u1\n");
  for (int d = -1; d <= 3; ++d) CHECK(qdim(slice(g, d)) == (d == 0 ? 1 : 0));
}

TEST_CASE("A/I has dimension 1 in degree 0 only") {
  auto g = from_text(
      "vars 0 3\n"
      "twists F0: 0\n"
      "twists F1: 1 1 1\n"
      "rel: u1\n"
      "rel: u2\n"
      "rel: u3\n");
  HilbertData h = hilbert_data(g, -2, 4);
  for (const auto& rec : h.records) CHECK(rec.dim == (rec.degree == 0 ? 1 : 0));
}

TEST_CASE("nilpotent-orbit style module over Q[x]: slice structure") {
  // one generator in degree -w, one relation x^w * u^(w+1); w = 2
  auto g = from_text(
      "vars 1 1\n"
      "twists F0: -2\n"
      "twists F1: 1\n"
      "rel: x1^2*u1^3\n");
  for (int d = -4; d <= 3; ++d) {
    SliceModule s = slice(g, d);
    RInvariants inv = invariants(s);
    if (d < -2) {
      CHECK(inv.free_rank == 0);
      CHECK(inv.torsion.empty());
    } else if (d <= 0) {
      CHECK(inv.free_rank == 1);
      CHECK(inv.torsion.empty());
    } else {
      CHECK(inv.free_rank == 0);
      CHECK(inv.torsion == std::vector<int>{2});
    }
  }
}

TEST_CASE("sign twist: involution, odd terms negated, Hilbert data preserved") {
  auto g = from_text(
      "vars 1 2\n"
      "twists F0: 0 1\n"
      "twists F1: 2 3\n"
      "rel: u1*u2 ; x1*u1\n"
      "rel: u1^3 ; x1*u2^2\n");
  auto t = sign_twist(g);
  CHECK(t.phi().at(0, 0) == parse_polynomial(g.context(), "u1*u2"));
  CHECK(t.phi().at(1, 0) == parse_polynomial(g.context(), "-x1*u1"));
  auto tt = sign_twist(t);
  CHECK(tt.phi() == g.phi());
  for (int d = 0; d <= 4; ++d) {
    SliceModule a = slice(g, d), b = slice(t, d);
    CHECK(hilbert_function(a, 0, 5) == hilbert_function(b, 0, 5));
  }
}

TEST_CASE("filtration shift convention") {
  CHECK(filtration_shift_convention(7, 0) == 7);
  CHECK(filtration_shift_convention(5, 2) == 3);
  CHECK(filtration_shift_convention(0, -4) == 4);
}

TEST_CASE("zero module is accepted everywhere") {
  auto ctx = make_context(0, 2);
  auto z = Presentation::zero_module(ctx);
  CHECK(qdim(slice(z, 0)) == 0);
  CHECK(hilbert_data(z, -2, 2).records.size() == 5);
}

TEST_CASE("parser rejects non-homogeneous columns with a diagnostic") {
  try {
    from_text(
        "vars 0 2\n"
        "twists F0: 0\n"
        "twists F1: 2\n"
        "rel: u1 + u1*u2\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("column 1") != std::string::npos);
  }
  try {
    from_text(
        "vars 0 2\n"
        "twists F0: 0\n"
        "twists F1: 2\n"
        "rel: u1\n");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    std::string msg = e.what();
    CHECK(msg.find("degree 1") != std::string::npos);
    CHECK(msg.find("demand 2") != std::string::npos);
  }
}

TEST_CASE("module text round trip") {
  auto g = from_text(
      "vars 1 2\n"
      "twists F0: 0 -1\n"
      "twists F1: 2\n"
      "rel: u1*u2 ; x1*u1^3\n");
  auto h = parse_module_text(serialize_module(g));
  CHECK(h.phi() == g.phi());
  CHECK(h.f0().twists == g.f0().twists);
  CHECK(h.f1().twists == g.f1().twists);
}

TEST_CASE("slice respects relation enumeration: coker dims for koszul quotient") {
  // A/(u1,u2) over n=3: dims = dims of Q[u3]
  auto g = from_text(
      "vars 0 3\n"
      "twists F0: 0\n"
      "twists F1: 1 1\n"
      "rel: u1\n"
      "rel: u2\n");
  for (int d = 0; d <= 4; ++d) CHECK(qdim(slice(g, d)) == 1);
  CHECK(qdim(slice(g, -1)) == 0);
}
