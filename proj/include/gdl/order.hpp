#ifndef GDL_ORDER_HPP
#define GDL_ORDER_HPP

#include <vector>

#include "gdl/monomial.hpp"

namespace gdl {

enum class OrderKind {
  /// Graded-variable block first (degrevlex), then base block (degrevlex).
  /// Keeps homogeneous computations stratified by grading degree. Default.
  Block,
  /// Degrevlex on total degree, graded variables first in the variable order.
  TotalDegRevLex,
};

namespace detail {
// degrevlex comparison restricted to the stored index range [lo, hi).
// Returns <0 if a < b, 0 if equal, >0 if a > b.
inline int drl_compare_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i) {
    int d = a[i] - b[i];
    if (d != 0) return d > 0 ? -1 : 1;  // larger trailing exponent = smaller
  }
  return 0;
}
}  // namespace detail

struct MonomialOrder {
  OrderKind kind = OrderKind::Block;

  int compare(const Monomial& a, const Monomial& b, const Context& ctx) const {
    const int m = ctx.base_vars();
    const int t = ctx.total_vars();
    if (kind == OrderKind::Block) {
      int c = detail::drl_compare_range(a, b, m, t);
      if (c != 0) return c;
      return detail::drl_compare_range(a, b, 0, m);
    }
    // TotalDegRevLex, graded variables first: the last variable in the
    // sequence is the last base variable, so scan base block then fiber block.
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    for (int i = m - 1; i >= 0; --i) {
      int d = a[i] - b[i];
      if (d != 0) return d > 0 ? -1 : 1;
    }
    for (int i = t - 1; i >= m; --i) {
      int d = a[i] - b[i];
      if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b, const Context& ctx) const {
    return compare(a, b, ctx) < 0;
  }
};

enum class ModuleOrderKind { TermOverPosition, PositionOverTerm };

/// Order on pairs (component, monomial) of a free module with twists.
struct ModuleOrder {
  MonomialOrder mono;
  ModuleOrderKind kind = ModuleOrderKind::TermOverPosition;
  std::vector<int> twists;  // per-component grading twist

  int twist(int c) const { return c < static_cast<int>(twists.size()) ? twists[c] : 0; }

  int compare(int c1, const Monomial& m1, int c2, const Monomial& m2,
              const Context& ctx) const {
    if (kind == ModuleOrderKind::TermOverPosition) {
      int d1 = m1.xi_degree(ctx) + twist(c1);
      int d2 = m2.xi_degree(ctx) + twist(c2);
      if (d1 != d2) return d1 < d2 ? -1 : 1;
      int c = mono.compare(m1, m2, ctx);
      if (c != 0) return c;
      if (c1 != c2) return c1 > c2 ? -1 : 1;  // lower component wins ties
      return 0;
    }
    if (c1 != c2) return c1 > c2 ? -1 : 1;
    return mono.compare(m1, m2, ctx);
  }
};

}  // namespace gdl

#endif
