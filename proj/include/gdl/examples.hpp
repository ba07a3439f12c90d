#ifndef GDL_EXAMPLES_HPP
#define GDL_EXAMPLES_HPP

#include <cstdint>
#include <random>

#include "gdl/duality.hpp"

namespace gdl {

/// A(-t1) (+) ... over a field base with n graded variables.
Presentation builtin_free(int n, std::vector<int> twists);

/// A/I for the irrelevant ideal I = (u_1..u_n).
Presentation builtin_a_mod_i(int n);

/// A/(u_i : i in vars), 1-based variable indices.
Presentation builtin_koszul_quotient(int n, const std::vector<int>& vars);

/// The rank-one module over Q[x] with one generator in degree -w and the
/// single relation x^w u^(w+1); slices: R in degrees [-w, 0], R/(x^w) above,
/// zero below. The builder verifies this profile before returning and throws
/// InternalError on any mismatch.
Presentation build_example_4_1(int w);

/// The graded piece Gr^F_p M of the intersection-cohomology module on the
/// quadric cone sum x_i^2 = 0, presented over R = Q[x_1..x_n] from the short
/// exact sequence 0 -> R^{>=p-m} -f-> R^{>=p-m+1 (odd) / +2 (even)} -> Gr -> 0
/// with m = floor(n/2). Generators are the minimal monomial generators of the
/// target; relations are their syzygies plus the f-multiples of the source
/// generators rewritten through membership certificates.
SliceModule build_example_4_3(int n, int p);

struct Ex43Row {
  int j = 0;
  std::string expected;  // human-readable expectation
  std::string got;
  bool pass = false;
};

struct Ex43Verdict {
  int n = 0, p = 0;
  std::vector<Ex43Row> rows;
  bool pass = true;
};

/// Compare ext_over_R of the example against the closed-form tables:
/// Ext^1 = R/fR (Hilbert function over x-degrees [x_lo, x_hi], grading
/// normalized), Ext^{n-1} and Ext^n total dimensions by monomial counting,
/// everything else zero.
Ex43Verdict check_example_4_3(int n, int p, int x_lo = 0, int x_hi = 8);

struct Ex36Verdict {
  bool pass = true;
  std::vector<TableEntry> entries;  // cech route values
};

/// The projective-line table: H^0 dims p+1 for p >= 0 and H^1 dims -p-1 for
/// p <= -2, computed by the cech route on A with n = 2 and compared exactly.
Ex36Verdict check_example_3_6(int p_lo, int p_hi, int k_cap);

/// Deterministic uniform integer in [lo, hi] from a raw 64-bit stream
/// (implementation-independent, unlike std::uniform_int_distribution).
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

/// Seeded suite of random monomial-graded modules: field base, n <= 3,
/// twists in [-4, 4], at most 5 generators and 5 monomial relations.
std::vector<Presentation> random_monomial_suite(uint64_t seed, int count);

}  // namespace gdl

#endif
