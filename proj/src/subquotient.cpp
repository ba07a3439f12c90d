#include "gdl/subquotient.hpp"

namespace gdl {

namespace {

bool is_field_context(const ContextPtr& ctx) { return ctx->total_vars() == 0; }

QVec to_qvec(const FreeElement& e) {
  QVec v;
  for (const auto& [c, p] : e.components()) v.emplace(c, p.constant_coefficient());
  return v;
}

FreeElement from_qvec(const ContextPtr& ctx, const QVec& v) {
  FreeElement e(ctx);
  for (const auto& [c, coef] : v) e.add_term(c, unit_monomial(*ctx), coef);
  return e;
}

std::vector<QVec> matrix_qcols(const PolyMatrix& m) {
  std::vector<QVec> cols;
  cols.reserve(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    QVec v;
    for (int r = 0; r < m.rows(); ++r) {
      const Rational q = m.at(r, c).constant_coefficient();
      if (!is_zero(q)) v.emplace(r, q);
    }
    cols.push_back(std::move(v));
  }
  return cols;
}

ModuleOrder order_for(const std::vector<int>& twists) {
  ModuleOrder o;
  o.twists = twists;
  return o;
}

// Gens of {v : map(v) in span(target.rels)} over a polynomial base:
// first-block projection of the syzygies of [map columns | target rels].
std::vector<FreeElement> preimage_gens_grobner(const ContextPtr& ctx, const PolyMatrix& map,
                                               const PresNode& target) {
  std::vector<FreeElement> combined = map.columns();
  const int first = static_cast<int>(combined.size());
  for (const auto& r : target.rels) combined.push_back(r);
  auto syz = syzygies(combined, order_for(target.gen_twists));
  std::vector<FreeElement> gens;
  for (const auto& s : syz) {
    FreeElement v(ctx);
    for (const auto& [c, p] : s.components())
      if (c < first) v.set_component(c, p);
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  return gens;
}

// Apply an ambient matrix to an ambient element.
FreeElement apply_matrix(const ContextPtr& ctx, const PolyMatrix& m, const FreeElement& v) {
  FreeElement img(ctx);
  for (const auto& [comp, p] : v.components()) {
    for (int r = 0; r < m.rows(); ++r) {
      const Polynomial& entry = m.at(r, comp);
      if (entry.is_zero()) continue;
      Polynomial prod = entry * p;
      if (prod.is_zero()) continue;
      FreeElement add(ctx, r, std::move(prod));
      img += add;
    }
  }
  return img;
}

}  // namespace

std::vector<FreeElement> preimage_gens(const ContextPtr& ctx, const PolyMatrix& map,
                                       const PresNode& target) {
  if (!is_field_context(ctx)) return preimage_gens_grobner(ctx, map, target);
  // field case: kernel of (map followed by the quotient) via echelon
  QReducer rel_span;
  for (const auto& r : target.rels) rel_span.insert(to_qvec(r));
  QReducer tracking;
  std::vector<QVec> cols = matrix_qcols(map);
  std::vector<FreeElement> gens;
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    QVec reduced = rel_span.residual(cols[c]);
    auto combo = tracking.insert(std::move(reduced));
    if (!combo) continue;
    // column c = sum combo_j * column_j modulo relations: kernel vector
    QVec k;
    k.emplace(c, Rational(1));
    for (const auto& [j, a] : *combo) qvec_axpy(k, -a, QVec{{j, Rational(1)}});
    gens.push_back(from_qvec(ctx, k));
  }
  return gens;
}

HomologyAt homology_at(const PresComplex& cx, int j) {
  HomologyAt h;
  const PresNode* node = cx.node(j);
  if (!node) return h;
  const PolyMatrix* out = cx.map_at(j);
  const PolyMatrix* in = cx.map_at(j - 1);
  const ContextPtr& ctx = cx.ctx;

  // cocycle generators
  std::vector<FreeElement> kgens;
  if (out && cx.node(j + 1)) {
    kgens = preimage_gens(ctx, *out, *cx.node(j + 1));
  } else {
    for (int c = 0; c < node->rank(); ++c) {
      FreeElement e(ctx);
      e.add_term(c, unit_monomial(*ctx), Rational(1));
      kgens.push_back(std::move(e));
    }
  }

  h.cocycles = kgens;
  for (const auto& k : kgens) {
    auto d = k.degree(node->gen_twists);
    h.pres.gen_twists.push_back(d.value_or(0));
    if (!d) h.pres.graded = false;
  }
  if (!node->graded) h.pres.graded = false;

  // relations: {c : K c in im(in) + span(node rels)}
  std::vector<FreeElement> combined = kgens;
  const int first = static_cast<int>(combined.size());
  if (in && cx.node(j - 1))
    for (auto& col : in->columns())
      if (!col.is_zero()) combined.push_back(std::move(col));
  for (const auto& r : node->rels) combined.push_back(r);

  if (is_field_context(ctx)) {
    QReducer boundary;
    for (int i = first; i < static_cast<int>(combined.size()); ++i)
      boundary.insert(to_qvec(combined[i]));
    QReducer indep;
    for (int c = 0; c < first; ++c) {
      QVec reduced = boundary.residual(to_qvec(combined[c]));
      auto combo = indep.insert(std::move(reduced));
      if (!combo) continue;
      QVec rel;
      rel.emplace(c, Rational(1));
      for (const auto& [jj, a] : *combo) qvec_axpy(rel, -a, QVec{{jj, Rational(1)}});
      h.pres.rels.push_back(from_qvec(ctx, rel));
      h.pres.rel_twists.push_back(c < static_cast<int>(h.pres.gen_twists.size())
                                      ? h.pres.gen_twists[c]
                                      : 0);
    }
    return h;
  }

  auto syz = syzygies(combined, order_for(node->gen_twists));
  for (const auto& s : syz) {
    FreeElement rel(ctx);
    for (const auto& [c, p] : s.components())
      if (c < first) rel.set_component(c, p);
    if (rel.is_zero()) continue;
    auto d = rel.degree(h.pres.gen_twists);
    h.pres.rels.push_back(std::move(rel));
    h.pres.rel_twists.push_back(d.value_or(0));
    if (!d) h.pres.graded = false;
  }
  return h;
}

bool node_is_zero(const ContextPtr& ctx, const PresNode& node) {
  if (node.rank() == 0) return true;
  if (is_field_context(ctx)) {
    QReducer span;
    for (const auto& r : node.rels) span.insert(to_qvec(r));
    for (int c = 0; c < node.rank(); ++c) {
      QVec e;
      e.emplace(c, Rational(1));
      if (!span.in_span(e)) return false;
    }
    return true;
  }
  if (node.rels.empty()) return false;
  auto gb = buchberger(node.rels, order_for(node.gen_twists));
  for (int c = 0; c < node.rank(); ++c) {
    FreeElement e(ctx);
    e.add_term(c, unit_monomial(*ctx), Rational(1));
    if (!normal_form(e, gb).is_zero()) return false;
  }
  return true;
}

PolyMatrix induced_on_homology(const PresComplex& a, int j, const HomologyAt& ha,
                               const PresComplex& b, const HomologyAt& hb,
                               const PolyMatrix& t_at_j) {
  const ContextPtr& ctx = a.ctx;
  const int hb_count = static_cast<int>(hb.cocycles.size());
  PolyMatrix result(ctx, hb_count, static_cast<int>(ha.cocycles.size()));

  // spanning set of the target level: boundaries and relations, then cocycles
  std::vector<FreeElement> lower;
  const PolyMatrix* in_b = b.map_at(j - 1);
  if (in_b && b.node(j - 1))
    for (auto& col : in_b->columns())
      if (!col.is_zero()) lower.push_back(std::move(col));
  for (const auto& r : b.node(j)->rels) lower.push_back(r);

  if (is_field_context(ctx)) {
    QReducer red;
    for (const auto& s : lower) red.insert(to_qvec(s));
    const int boundary_inserted = red.inserted();
    for (const auto& s : hb.cocycles) red.insert(to_qvec(s));
    for (int c = 0; c < static_cast<int>(ha.cocycles.size()); ++c) {
      FreeElement img = apply_matrix(ctx, t_at_j, ha.cocycles[c]);
      auto combo = red.express(to_qvec(img));
      if (!combo) throw InternalError("induced_on_homology: image is not a cocycle");
      for (const auto& [id, coef] : *combo) {
        int rel_id = id - boundary_inserted;
        if (rel_id >= 0 && rel_id < hb_count) result.at(rel_id, c) = Polynomial(ctx, coef);
      }
    }
    return result;
  }

  std::vector<FreeElement> gens = hb.cocycles;
  for (const auto& s : lower) gens.push_back(s);
  for (int c = 0; c < static_cast<int>(ha.cocycles.size()); ++c) {
    FreeElement img = apply_matrix(ctx, t_at_j, ha.cocycles[c]);
    auto cert = member_with_coefficients(img, gens, order_for(b.node(j)->gen_twists));
    if (!cert) throw InternalError("induced_on_homology: image is not a cocycle");
    for (int r = 0; r < hb_count; ++r) result.at(r, c) = (*cert)[r];
  }
  return result;
}

bool map_is_surjective(const ContextPtr& ctx, const PresNode& target, const PolyMatrix& map) {
  if (target.rank() == 0) return true;
  std::vector<FreeElement> span = map.columns();
  for (const auto& r : target.rels) span.push_back(r);
  if (is_field_context(ctx)) {
    QReducer red;
    for (const auto& s : span) red.insert(to_qvec(s));
    for (int c = 0; c < target.rank(); ++c) {
      QVec e;
      e.emplace(c, Rational(1));
      if (!red.in_span(e)) return false;
    }
    return true;
  }
  auto gb = buchberger(span, order_for(target.gen_twists));
  for (int c = 0; c < target.rank(); ++c) {
    FreeElement e(ctx);
    e.add_term(c, unit_monomial(*ctx), Rational(1));
    if (!normal_form(e, gb).is_zero()) return false;
  }
  return true;
}

bool map_is_injective(const ContextPtr& ctx, const PresNode& source, const PresNode& target,
                      const PolyMatrix& map) {
  std::vector<FreeElement> ker = preimage_gens(ctx, map, target);
  if (ker.empty()) return true;
  if (is_field_context(ctx)) {
    QReducer span;
    for (const auto& r : source.rels) span.insert(to_qvec(r));
    for (const auto& k : ker)
      if (!span.in_span(to_qvec(k))) return false;
    return true;
  }
  if (source.rels.empty()) {
    for (const auto& k : ker)
      if (!k.is_zero()) return false;
    return true;
  }
  auto gb = buchberger(source.rels, order_for(source.gen_twists));
  for (const auto& k : ker)
    if (!normal_form(k, gb).is_zero()) return false;
  return true;
}

SliceModule node_as_slice(const ContextPtr& ctx, const PresNode& node) {
  SliceModule s;
  s.rctx = ctx;
  s.gen_twists = node.gen_twists;
  for (int i = 0; i < node.rank(); ++i)
    s.labels.push_back(SliceLabel{i, unit_monomial(*ctx), false});
  s.relations = node.rels;
  s.relation_twists = node.rel_twists;
  s.graded = node.graded;
  return s;
}

Presentation node_as_presentation(const ContextPtr& ctx, const PresNode& node) {
  GradedFreeModule f0(node.gen_twists);
  GradedFreeModule f1(node.rel_twists);
  PolyMatrix phi = PolyMatrix::from_columns(ctx, f0.rank(), node.rels);
  return Presentation(ctx, std::move(f0), std::move(f1), std::move(phi));
}

Presentation slice_as_presentation(const SliceModule& s) {
  GradedFreeModule f0(s.gen_twists);
  GradedFreeModule f1(s.relation_twists);
  PolyMatrix phi = PolyMatrix::from_columns(s.rctx, f0.rank(), s.relations);
  return Presentation(s.rctx, std::move(f0), std::move(f1), std::move(phi));
}

}  // namespace gdl
