#ifndef GDL_PRESENTATION_HPP
#define GDL_PRESENTATION_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gdl/free_module.hpp"
#include "gdl/matrix.hpp"
#include "gdl/qlinalg.hpp"

namespace gdl {

/// A finitely presented graded module: coker(phi: F1 -> F0), phi homogeneous.
class Presentation {
public:
  Presentation(ContextPtr ctx, GradedFreeModule f0, GradedFreeModule f1, PolyMatrix phi)
      : ctx_(std::move(ctx)), f0_(std::move(f0)), f1_(std::move(f1)), phi_(std::move(phi)) {
    if (phi_.rows() != f0_.rank() || phi_.cols() != f1_.rank())
      throw InputError("presentation matrix shape does not match module ranks");
  }

  /// Free module as a presentation (no relations).
  static Presentation free_module(ContextPtr ctx, GradedFreeModule f0) {
    PolyMatrix none(ctx, f0.rank(), 0);
    return Presentation(std::move(ctx), std::move(f0), GradedFreeModule{}, std::move(none));
  }

  static Presentation zero_module(ContextPtr ctx) {
    return free_module(std::move(ctx), GradedFreeModule{});
  }

  const ContextPtr& context() const { return ctx_; }
  const GradedFreeModule& f0() const { return f0_; }
  const GradedFreeModule& f1() const { return f1_; }
  const PolyMatrix& phi() const { return phi_; }

  bool is_zero_presented() const { return f0_.rank() == 0; }

  /// Throws InputError naming the offending column when a column is not
  /// homogeneous of the degree its twist demands.
  void validate() const;

  Presentation shifted(int p) const {
    return Presentation(ctx_, f0_.shifted(p), f1_.shifted(p), phi_);
  }

  Presentation sign_twist() const {
    return Presentation(ctx_, f0_, f1_, phi_.sign_twist());
  }

private:
  ContextPtr ctx_;
  GradedFreeModule f0_, f1_;
  PolyMatrix phi_;
};

/// The grading shift G(p) with G(p)_d = G_{d+p}.
inline Presentation shift_grading(const Presentation& g, int p) { return g.shifted(p); }

/// Module structure transported through the automorphism u_i -> -u_i.
inline Presentation sign_twist(const Presentation& g) { return g.sign_twist(); }

/// The F[m] filtration-shift convention: (F[m])_p = F_{p-m}. Centralized so
/// the harness has one source of truth for this sign; note it is opposite to
/// the grading shift above.
inline int filtration_shift_convention(int p, int mshift) { return p - mshift; }

/// Degree-p slice of a graded module as a module over the base ring.
///
/// The ambient basis is labeled by (component, fiber monomial); relation
/// columns run over all fiber-monomial multiples of the presentation columns
/// landing in degree p. In the base-ring context the former base variables
/// carry the grading; `graded` records whether every relation column is
/// homogeneous there (generator twists are 0, so this means x-homogeneous
/// columns).
struct SliceModule {
  ContextPtr rctx;
  std::vector<SliceLabel> labels;
  std::vector<int> gen_twists;             // grading degrees of ambient generators
  std::vector<FreeElement> relations;      // columns over rctx
  std::vector<int> relation_twists;        // per column, meaningful when graded
  bool graded = true;

  int ambient_rank() const { return static_cast<int>(labels.size()); }
};

SliceModule slice(const Presentation& g, int p);

/// Exact dimension over the rationals; requires the base ring to be a field
/// (context with no variables).
int qdim(const SliceModule& s);

/// Relation columns as sparse rational vectors (field base ring only).
std::vector<QVec> rational_columns(const SliceModule& s);

/// dim_Q of the degree-t part of a slice module over a polynomial base ring.
/// Requires `graded`.
int hilbert_dim(const SliceModule& s, int t);

/// Hilbert function over [lo, hi].
std::vector<int> hilbert_function(const SliceModule& s, int lo, int hi);

/// Isomorphism invariants of a finitely generated module over a univariate
/// base ring (or a field): free rank plus the multiset of torsion exponents.
struct RInvariants {
  int free_rank = 0;
  std::vector<int> torsion;  // exponents e of the factors R/(x^e), ascending

  bool operator==(const RInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string str() const;
};

/// Structure of a slice module; supported for base rings with at most one
/// variable (the field case reports dimension as free rank of length-0 ring —
/// i.e. dim_Q as free_rank with no torsion).
RInvariants invariants(const SliceModule& s);

/// Per-degree report of hilbert_data.
struct HilbertRecord {
  int degree = 0;
  int dim = -1;                        // exact dim over Q when >= 0 (m == 0)
  std::optional<SliceModule> slice;    // populated when the base has variables
  std::vector<int> x_hilbert;          // Hilbert function over the x-window
};

struct HilbertData {
  std::vector<HilbertRecord> records;
};

/// Exact per-degree dimensions (field base) or slice presentations with their
/// base-ring Hilbert functions over [x_lo, x_hi].
HilbertData hilbert_data(const Presentation& g, int lo, int hi, int x_lo = 0, int x_hi = 8);

/// --- module definition text format ---------------------------------------
///
///   vars <m> <n>
///   twists F0: p1 p2 ...
///   twists F1: q1 q2 ...
///   rel: <poly> ; <poly> ; ...     (one line per F1 generator, one entry per
///                                   F0 component)
///
/// '#' starts a comment; blank lines are ignored.
Presentation parse_module(std::istream& in);
Presentation parse_module_text(const std::string& text);
std::string serialize_module(const Presentation& g);

/// Polynomial text syntax: e.g. "3/2*x1^2*u3 - u1*u2". Base variables use the
/// context's base prefix, graded variables its fiber prefix.
Polynomial parse_polynomial(const ContextPtr& ctx, const std::string& text);

}  // namespace gdl

#endif
