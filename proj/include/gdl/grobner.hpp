#ifndef GDL_GROBNER_HPP
#define GDL_GROBNER_HPP

#include <optional>
#include <vector>

#include "gdl/free_element.hpp"

namespace gdl {

struct GBOptions {
  /// Record enough bookkeeping to express GB elements in the original
  /// generators, originals in the GB, and Schreyer syzygies. Disables the
  /// pair-skipping criteria (every S-pair syzygy is recorded).
  bool track = false;
};

/// A Groebner basis of the submodule generated by `original`.
///
/// Elements are monic (leading coefficient 1), minimal (no leading term
/// divides another) and tail-reduced, so the output is canonical for a fixed
/// input ordering.
class GroebnerBasis {
public:
  ContextPtr ctx;
  ModuleOrder order;
  std::vector<FreeElement> gens;
  std::vector<FreeElement> original;

  // Tracking data (only when built with GBOptions.track):
  // gens[k] = sum_i coords[k][i] * original[i]
  std::vector<std::vector<Polynomial>> coords;
  // original[i] = sum_k expr[i][k] * gens[k]
  std::vector<std::vector<Polynomial>> expr;
  // Generators of the syzygy module of `original`, as elements of the free
  // module with one component per original generator.
  std::vector<FreeElement> syzygies_of_original;

  bool tracked = false;
};

GroebnerBasis buchberger(const std::vector<FreeElement>& gens, const ModuleOrder& order,
                         const GBOptions& opts = {});

/// Fully reduced normal form of e modulo gb. If `quotients` is non-null it
/// receives q with e = sum_k q[k]*gb.gens[k] + result.
FreeElement normal_form(const FreeElement& e, const GroebnerBasis& gb,
                        std::vector<Polynomial>* quotients = nullptr);

/// Coefficients c with sum c[i]*gens[i] = e, or nullopt if e is not a member.
std::optional<std::vector<Polynomial>> member_with_coefficients(
    const FreeElement& e, const std::vector<FreeElement>& gens, const ModuleOrder& order);

/// Generators of the kernel of (+) A(-deg g_i) -> F, e_i -> g_i.
std::vector<FreeElement> syzygies(const std::vector<FreeElement>& gens,
                                  const ModuleOrder& order);

}  // namespace gdl

#endif
