#ifndef GDL_FREE_MODULE_HPP
#define GDL_FREE_MODULE_HPP

#include <vector>

#include "gdl/monomial.hpp"
#include "gdl/order.hpp"

namespace gdl {

/// Twisted graded free module (+)_i A(-p_i): generator i sits in degree p_i.
struct GradedFreeModule {
  std::vector<int> twists;

  GradedFreeModule() = default;
  explicit GradedFreeModule(std::vector<int> t) : twists(std::move(t)) {}

  int rank() const { return static_cast<int>(twists.size()); }

  GradedFreeModule shifted(int p) const {
    GradedFreeModule r(*this);
    for (int& t : r.twists) t -= p;
    return r;
  }

  GradedFreeModule dual() const {
    GradedFreeModule r(*this);
    for (int& t : r.twists) t = -t;
    return r;
  }
};

/// All monomials of the given degree in the fiber variables, in a fixed
/// deterministic order (lexicographic, first variable's exponent descending).
std::vector<Monomial> fiber_monomials_of_degree(const Context& ctx, int degree);

/// Number of fiber monomials of the given degree: C(degree + n - 1, n - 1).
long long fiber_monomial_count(int fiber_vars, int degree);

/// Basis label of a degree slice of a free module: mono * e_comp.
struct SliceLabel {
  int comp = 0;
  Monomial mono;
  /// When set, the label denotes the inverse monomial mono^{-1} * e_comp of
  /// an inverse-polynomial module.
  bool inverse = false;
};

/// Basis of the degree-p slice of F (one label per (component, monomial) with
/// deg mono = p - twist(comp)), ordered by component then monomial order.
std::vector<SliceLabel> slice_basis(const Context& ctx, const GradedFreeModule& f, int p);

inline ModuleOrder default_module_order(const GradedFreeModule& f) {
  ModuleOrder o;
  o.twists = f.twists;
  return o;
}

}  // namespace gdl

#endif
