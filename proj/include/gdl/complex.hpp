#ifndef GDL_COMPLEX_HPP
#define GDL_COMPLEX_HPP

#include "gdl/subquotient.hpp"

namespace gdl {

/// Bounded cohomological complex of twisted graded free modules with
/// homogeneous degree-0 differentials. diffs[t] maps comps[t] to comps[t+1];
/// the component at cohomological index i is comps[i - lo].
struct FreeComplex {
  ContextPtr ctx;
  int lo = 0;
  std::vector<GradedFreeModule> comps;
  std::vector<PolyMatrix> diffs;

  int hi() const { return lo + static_cast<int>(comps.size()) - 1; }
  bool in_range(int i) const { return i >= lo && i <= hi(); }
  const GradedFreeModule* comp(int i) const { return in_range(i) ? &comps[i - lo] : nullptr; }
  const PolyMatrix* diff(int i) const {
    int t = i - lo;
    return (t >= 0 && t < static_cast<int>(diffs.size())) ? &diffs[t] : nullptr;
  }
  int rank_at(int i) const {
    const GradedFreeModule* f = comp(i);
    return f ? f->rank() : 0;
  }
};

/// Throws InternalError unless every differential is homogeneous of degree 0
/// with respect to the twists and d(i+1) o d(i) = 0 as an exact identity.
void validate_complex(const FreeComplex& cx);

/// The Koszul resolution of A/I: component at index i in [-n, 0] has rank
/// C(n, -i) with grading shift (i) (all generators in degree -i).
FreeComplex koszul_resolution(const ContextPtr& ctx);

/// Hom_A(L, A)[shift]: component i is Hom(L^{-i-shift}, A) with negated
/// twists; differentials are transposes with sign (-1)^i.
FreeComplex dual_complex(const FreeComplex& l, int homological_shift);

/// Strike differential entries that are nonzero constants by row/column
/// operations, smallest generator degree first, until none remain.
void minimize_complex(FreeComplex& cx);

/// A free resolution ... -> C^-1 -> C^0 (-> G) built from iterated syzygies;
/// C^0 covers G's generators, so coker(d^-1) is G by construction unless the
/// complex was minimized.
struct ResolutionCert {
  FreeComplex cx;
};

ResolutionCert free_resolution(const Presentation& g, bool minimize);

/// Degree-p slice: a complex of free modules over the base ring.
/// Labels of each level's basis are returned alongside.
struct SlicedComplex {
  PresComplex pres;
  std::vector<std::vector<SliceLabel>> labels;  // per level
};
SlicedComplex slice_complex(const FreeComplex& cx, int p);

/// Cohomology of the complex at index j as a graded module presentation over
/// the complex's own ring.
PresNode cohomology_presentation(const FreeComplex& cx, int j);

/// Degree-p slice of H^j as a module over the base ring.
SliceModule cohomology_slice(const FreeComplex& cx, int j, int p);

/// Slice-wise exactness of the resolution against g over [lo, hi]: vanishing
/// cohomology below index 0 and coker(d^-1) matching g degreewise.
bool verify_resolution(const ResolutionCert& cert, const Presentation& g, int lo, int hi);

/// H^j(RHom_A(G, A[n]))_p computed from a free resolution and its dual.
SliceModule ext_over_A(const Presentation& g, int j, int p, bool minimize = true);

/// Ext^j_R(M, R) over the base ring (omega and the top exterior power are
/// trivialized to R).
SliceModule ext_over_R(const SliceModule& m, int j);

}  // namespace gdl

#endif
