#ifndef GDL_SUBQUOTIENT_HPP
#define GDL_SUBQUOTIENT_HPP

#include <optional>

#include "gdl/grobner.hpp"
#include "gdl/matrix.hpp"
#include "gdl/presentation.hpp"

namespace gdl {

/// A finitely presented module given inside an ambient free module:
/// coker(rels) with ambient generator twists.
struct PresNode {
  std::vector<int> gen_twists;
  std::vector<FreeElement> rels;
  std::vector<int> rel_twists;
  bool graded = true;

  int rank() const { return static_cast<int>(gen_twists.size()); }

  static PresNode free_node(std::vector<int> twists) {
    PresNode n;
    n.gen_twists = std::move(twists);
    return n;
  }
  static PresNode from_slice(const SliceModule& s) {
    PresNode n;
    n.gen_twists = s.gen_twists;
    n.rels = s.relations;
    n.rel_twists = s.relation_twists;
    n.graded = s.graded;
    return n;
  }
};

/// Bounded complex of presented modules with ambient-level differentials.
/// maps[t] sends the ambient of nodes[t] into the ambient of nodes[t+1] and
/// must carry relation submodules into relation submodules.
struct PresComplex {
  ContextPtr ctx;
  int lo = 0;
  std::vector<PresNode> nodes;
  std::vector<PolyMatrix> maps;

  int hi() const { return lo + static_cast<int>(nodes.size()) - 1; }
  bool in_range(int i) const { return i >= lo && i <= hi(); }
  const PresNode* node(int i) const { return in_range(i) ? &nodes[i - lo] : nullptr; }
  /// differential from index i to i+1
  const PolyMatrix* map_at(int i) const {
    int t = i - lo;
    return (t >= 0 && t < static_cast<int>(maps.size())) ? &maps[t] : nullptr;
  }
};

/// Homology at one index: a presentation whose generators are cocycle
/// representatives in the ambient of that level.
struct HomologyAt {
  PresNode pres;
  std::vector<FreeElement> cocycles;
};

HomologyAt homology_at(const PresComplex& cx, int j);

/// Is the presented module zero (every generator inside the relation span)?
bool node_is_zero(const ContextPtr& ctx, const PresNode& node);

/// Map induced on homology by an ambient chain map T at level j
/// (columns: images of HA generators in HB coordinates).
PolyMatrix induced_on_homology(const PresComplex& a, int j, const HomologyAt& ha,
                               const PresComplex& b, const HomologyAt& hb,
                               const PolyMatrix& t_at_j);

bool map_is_surjective(const ContextPtr& ctx, const PresNode& target,
                       const PolyMatrix& map);
bool map_is_injective(const ContextPtr& ctx, const PresNode& source, const PresNode& target,
                      const PolyMatrix& map);
inline bool map_is_iso(const ContextPtr& ctx, const PresNode& source, const PresNode& target,
                       const PolyMatrix& map) {
  return map_is_surjective(ctx, target, map) && map_is_injective(ctx, source, target, map);
}

/// Generators of {v in ambient : map(v) in span(target rels)} for an ambient
/// matrix into the ambient of `target`.
std::vector<FreeElement> preimage_gens(const ContextPtr& ctx, const PolyMatrix& map,
                                       const PresNode& target);

SliceModule node_as_slice(const ContextPtr& ctx, const PresNode& node);
Presentation node_as_presentation(const ContextPtr& ctx, const PresNode& node);
Presentation slice_as_presentation(const SliceModule& s);

}  // namespace gdl

#endif
