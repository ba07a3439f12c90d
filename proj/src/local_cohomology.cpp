#include "gdl/local_cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace gdl {

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

bool ModuleSummary::is_zero() const {
  switch (kind) {
    case Kind::FieldDim: return dim == 0;
    case Kind::Univariate: return inv.free_rank == 0 && inv.torsion.empty();
    case Kind::HilbertWindow: return hilbert.empty();
  }
  return true;
}

std::string ModuleSummary::str() const {
  switch (kind) {
    case Kind::FieldDim: return std::to_string(dim);
    case Kind::Univariate: {
      if (inv.free_rank == 0 && inv.torsion.empty()) return "0";
      std::ostringstream os;
      bool first = true;
      if (inv.free_rank > 0) {
        os << "R^" << inv.free_rank;
        first = false;
      }
      for (int e : inv.torsion) {
        if (!first) os << "+";
        os << "R/x^" << e;
        first = false;
      }
      return os.str();
    }
    case Kind::HilbertWindow: {
      if (hilbert.empty()) return "0";
      std::ostringstream os;
      os << "h[";
      for (size_t i = 0; i < hilbert.size(); ++i) {
        if (i) os << ",";
        os << hilbert[i];
      }
      os << "]";
      return os.str();
    }
  }
  return "?";
}

ModuleSummary summarize(const SliceModule& s) {
  ModuleSummary out;
  const int vars = s.rctx->total_vars();
  if (vars == 0) {
    out.kind = ModuleSummary::Kind::FieldDim;
    out.dim = qdim(s);
    return out;
  }
  if (vars == 1) {
    out.kind = ModuleSummary::Kind::Univariate;
    out.inv = invariants(s);
    return out;
  }
  out.kind = ModuleSummary::Kind::HilbertWindow;
  if (s.ambient_rank() == 0) return out;
  // min-generator-normalized Hilbert window of length 9
  int lo = *std::min_element(s.gen_twists.begin(), s.gen_twists.end());
  for (int d = lo; d <= lo + 32; ++d) {
    if (hilbert_dim(s, d) > 0) {
      for (int t = 0; t < 9; ++t) out.hilbert.push_back(hilbert_dim(s, d + t));
      return out;
    }
  }
  return out;  // zero module
}

SliceModule top_lc_of_free(const ContextPtr& ctx, const GradedFreeModule& f, int p) {
  const int n = ctx->fiber_vars();
  if (n < 1) throw InputError("top_lc_of_free needs at least one graded variable");
  SliceModule s;
  s.rctx = base_ring_of(ctx);
  for (int c = 0; c < f.rank(); ++c) {
    // basis u^{-a}, a >= 1 componentwise, |a| = twist - p
    int total = f.twists[c] - p;
    for (auto& b : fiber_monomials_of_degree(*ctx, total - n)) {
      Monomial a = b;
      for (int v = ctx->base_vars(); v < ctx->total_vars(); ++v) a[v] += 1;
      s.labels.push_back(SliceLabel{c, a, true});
      s.gen_twists.push_back(0);
    }
  }
  return s;
}

SlicedComplex inverse_poly_slice_complex(const FreeComplex& cx, int p) {
  const ContextPtr& ctx = cx.ctx;
  const int m = ctx->base_vars();
  SlicedComplex out;
  out.pres.ctx = base_ring_of(ctx);
  out.pres.lo = cx.lo;

  std::vector<std::map<std::pair<int, std::vector<int>>, int>> index;
  for (int i = cx.lo; i <= cx.hi(); ++i) {
    SliceModule level = top_lc_of_free(ctx, *cx.comp(i), p);
    std::map<std::pair<int, std::vector<int>>, int> idx;
    for (size_t r = 0; r < level.labels.size(); ++r)
      idx.emplace(std::make_pair(level.labels[r].comp, level.labels[r].mono.exps()),
                  static_cast<int>(r));
    out.pres.nodes.push_back(PresNode::free_node(level.gen_twists));
    out.labels.push_back(std::move(level.labels));
    index.push_back(std::move(idx));
  }
  for (int i = cx.lo; i < cx.hi(); ++i) {
    const PolyMatrix* d = cx.diff(i);
    const auto& src = out.labels[i - cx.lo];
    const auto& tgt_index = index[i + 1 - cx.lo];
    PolyMatrix sliced(out.pres.ctx, static_cast<int>(out.labels[i + 1 - cx.lo].size()),
                      static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
      const Monomial& a = src[c].mono;  // exponents of the inverse monomial
      for (int r = 0; r < d->rows(); ++r) {
        const Polynomial& entry = d->at(r, src[c].comp);
        for (const auto& [mono, coef] : entry.terms()) {
          // u^beta * u^{-a} survives iff a - beta stays >= 1 componentwise
          std::vector<int> target(ctx->total_vars(), 0);
          bool alive = true;
          for (int v = m; v < ctx->total_vars(); ++v) {
            target[v] = a[v] - mono[v];
            if (target[v] < 1) {
              alive = false;
              break;
            }
          }
          if (!alive) continue;
          auto it = tgt_index.find(std::make_pair(r, target));
          if (it == tgt_index.end())
            throw InternalError("inverse_poly_slice_complex: missing target label");
          std::vector<int> base_part(mono.exps().begin(), mono.exps().begin() + m);
          sliced.at(it->second, static_cast<int>(c))
              .add_term(Monomial(std::move(base_part)), coef);
        }
      }
    }
    out.pres.maps.push_back(std::move(sliced));
  }
  return out;
}

SliceModule lc_resolution_route_complex(const FreeComplex& cx, int i, int p) {
  const int n = cx.ctx->fiber_vars();
  SlicedComplex icx = inverse_poly_slice_complex(cx, p);
  HomologyAt h = homology_at(icx.pres, i - n);
  return node_as_slice(icx.pres.ctx, h.pres);
}

SliceModule lc_resolution_route(const Presentation& g, int i, int p, bool minimize) {
  ResolutionCert res = free_resolution(g, minimize);
  return lc_resolution_route_complex(res.cx, i, p);
}

// ---------------------------------------------------------------------------
// Koszul / Cech truncations
// ---------------------------------------------------------------------------

namespace {

class TruncationBuilder {
public:
  TruncationBuilder(const Presentation& g, int p) : g_(g), p_(p) {
    n_ = g.context()->fiber_vars();
    rctx_ = base_ring_of(g.context());
    for (int s = 0; s <= n_; ++s) subsets_.push_back(subsets_of_size(n_, s));
  }

  int levels() const { return n_; }
  const ContextPtr& rctx() const { return rctx_; }

  /// Hom(K(u^k), G) sliced at p: level i = (+)_{|J|=i} G_{p+ki}.
  PresComplex full(int k) {
    PresComplex cx;
    cx.ctx = rctx_;
    cx.lo = 0;
    for (int lvl = 0; lvl <= n_; ++lvl) cx.nodes.push_back(level_node(k, lvl));
    for (int lvl = 0; lvl < n_; ++lvl) cx.maps.push_back(level_diff(k, lvl));
    return cx;
  }

  /// Truncated Cech complex: level i has the subsets of size i+1.
  PresComplex trunc(int k) {
    PresComplex cx;
    cx.ctx = rctx_;
    cx.lo = 0;
    for (int lvl = 1; lvl <= n_; ++lvl) cx.nodes.push_back(level_node(k, lvl));
    for (int lvl = 1; lvl < n_; ++lvl) cx.maps.push_back(level_diff(k, lvl));
    return cx;
  }

  /// Chain transition full(k) -> full(k+1) at one level: blockwise
  /// multiplication by xi_J (the (3.3.3)-style comparison maps).
  PolyMatrix transition(int k, int lvl) {
    const SliceModule& src = slice_at(p_ + k * lvl);
    const SliceModule& tgt = slice_at(p_ + (k + 1) * lvl);
    const int blocks = static_cast<int>(subsets_[lvl].size());
    PolyMatrix t(rctx_, blocks * tgt.ambient_rank(), blocks * src.ambient_rank());
    for (int b = 0; b < blocks; ++b) {
      Monomial sigma(g_.context()->total_vars());
      for (int j : subsets_[lvl][b]) sigma[g_.context()->base_vars() + j] += 1;
      PolyMatrix m = mult_matrix(p_ + k * lvl, sigma);
      for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
          if (!m.at(r, c).is_zero())
            t.at(b * tgt.ambient_rank() + r, b * src.ambient_rank() + c) = m.at(r, c);
    }
    return t;
  }

  PolyMatrix transition_trunc(int k, int lvl) { return transition(k, lvl + 1); }

  /// Composite transition full(k) -> full(k2) at one level (multiplication
  /// by xi_J^(k2-k) blockwise).
  PolyMatrix transition_to(int k, int k2, int lvl) {
    const SliceModule& src = slice_at(p_ + k * lvl);
    const SliceModule& tgt = slice_at(p_ + k2 * lvl);
    const int blocks = static_cast<int>(subsets_[lvl].size());
    PolyMatrix t(rctx_, blocks * tgt.ambient_rank(), blocks * src.ambient_rank());
    for (int b = 0; b < blocks; ++b) {
      Monomial sigma(g_.context()->total_vars());
      for (int j : subsets_[lvl][b]) sigma[g_.context()->base_vars() + j] += k2 - k;
      PolyMatrix m = mult_matrix(p_ + k * lvl, sigma);
      for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
          if (!m.at(r, c).is_zero())
            t.at(b * tgt.ambient_rank() + r, b * src.ambient_rank() + c) = m.at(r, c);
    }
    return t;
  }

  PolyMatrix transition_to_trunc(int k, int k2, int lvl) { return transition_to(k, k2, lvl + 1); }

  /// The colimit insertion G_p -> C^0 at truncation k: identical to the full
  /// complex's differential at level 0.
  PolyMatrix beta_chain(int k) { return level_diff(k, 0); }

  const SliceModule& slice_at(int q) {
    auto it = slice_cache_.find(q);
    if (it == slice_cache_.end()) it = slice_cache_.emplace(q, slice(g_, q)).first;
    return it->second;
  }

  const PresComplex& full_cached(int k) {
    auto it = full_cache_.find(k);
    if (it == full_cache_.end()) it = full_cache_.emplace(k, full(k)).first;
    return it->second;
  }
  const PresComplex& trunc_cached(int k) {
    auto it = trunc_cache_.find(k);
    if (it == trunc_cache_.end()) it = trunc_cache_.emplace(k, trunc(k)).first;
    return it->second;
  }
  const HomologyAt& homology_cached(bool truncated, int k, int lvl) {
    auto key = std::make_tuple(truncated, k, lvl);
    auto it = hom_cache_.find(key);
    if (it == hom_cache_.end()) {
      const PresComplex& cx = truncated ? trunc_cached(k) : full_cached(k);
      it = hom_cache_.emplace(key, homology_at(cx, lvl)).first;
    }
    return it->second;
  }

  /// Scale beyond which the truncations have provably seen all of the data
  /// relevant to slice p (used to confirm early stabilizations).
  int scale_floor() const {
    int tmin = 0, tmax = 0;
    for (int t : g_.f0().twists) {
      tmin = std::min(tmin, t);
      tmax = std::max(tmax, t);
    }
    for (int t : g_.f1().twists) {
      tmin = std::min(tmin, t);
      tmax = std::max(tmax, t);
    }
    return std::abs(p_) + (tmax - tmin) + n_ + 2;
  }

private:
  PresNode level_node(int k, int lvl) {
    const SliceModule& s = slice_at(p_ + k * lvl);
    const int blocks = static_cast<int>(subsets_[lvl].size());
    PresNode node;
    node.graded = s.graded;
    for (int b = 0; b < blocks; ++b)
      for (int t : s.gen_twists) node.gen_twists.push_back(t);
    for (int b = 0; b < blocks; ++b) {
      const int off = b * s.ambient_rank();
      for (size_t rc = 0; rc < s.relations.size(); ++rc) {
        FreeElement shifted(rctx_);
        for (const auto& [comp, poly] : s.relations[rc].components())
          shifted.set_component(comp + off, poly);
        node.rels.push_back(std::move(shifted));
        node.rel_twists.push_back(s.relation_twists[rc]);
      }
    }
    return node;
  }

  PolyMatrix level_diff(int k, int lvl) {
    const SliceModule& src = slice_at(p_ + k * lvl);
    const SliceModule& tgt = slice_at(p_ + k * (lvl + 1));
    const auto& src_subsets = subsets_[lvl];
    const auto& tgt_subsets = subsets_[lvl + 1];
    std::map<std::vector<int>, int> tgt_index;
    for (size_t b = 0; b < tgt_subsets.size(); ++b)
      tgt_index.emplace(tgt_subsets[b], static_cast<int>(b));

    PolyMatrix d(rctx_, static_cast<int>(tgt_subsets.size()) * tgt.ambient_rank(),
                 static_cast<int>(src_subsets.size()) * src.ambient_rank());
    for (size_t sb = 0; sb < src_subsets.size(); ++sb) {
      const auto& sub = src_subsets[sb];
      for (int j = 0; j < n_; ++j) {
        if (std::find(sub.begin(), sub.end(), j) != sub.end()) continue;
        std::vector<int> sub2 = sub;
        sub2.insert(std::upper_bound(sub2.begin(), sub2.end(), j), j);
        int tb = tgt_index.at(sub2);
        int pos = static_cast<int>(std::lower_bound(sub2.begin(), sub2.end(), j) - sub2.begin());
        Rational sign((pos % 2 == 0) ? 1 : -1);
        Monomial sigma(g_.context()->total_vars());
        sigma[g_.context()->base_vars() + j] = k;
        PolyMatrix m = mult_matrix(p_ + k * lvl, sigma);
        for (int c = 0; c < m.cols(); ++c)
          for (int r = 0; r < m.rows(); ++r)
            if (!m.at(r, c).is_zero())
              d.at(tb * tgt.ambient_rank() + r,
                   static_cast<int>(sb) * src.ambient_rank() + c) = m.at(r, c) * sign;
      }
    }
    return d;
  }

  /// Ambient matrix of multiplication by a fiber monomial between slices.
  PolyMatrix mult_matrix(int q, const Monomial& sigma) {
    const SliceModule& src = slice_at(q);
    const SliceModule& tgt = slice_at(q + sigma.xi_degree(*g_.context()));
    std::map<std::pair<int, std::vector<int>>, int> tgt_index;
    for (size_t r = 0; r < tgt.labels.size(); ++r)
      tgt_index.emplace(std::make_pair(tgt.labels[r].comp, tgt.labels[r].mono.exps()),
                        static_cast<int>(r));
    PolyMatrix out(rctx_, tgt.ambient_rank(), src.ambient_rank());
    for (size_t c = 0; c < src.labels.size(); ++c) {
      Monomial target = src.labels[c].mono * sigma;
      auto it = tgt_index.find(std::make_pair(src.labels[c].comp, target.exps()));
      if (it == tgt_index.end()) throw InternalError("mult_matrix: missing slice label");
      out.at(it->second, static_cast<int>(c)) = Polynomial(rctx_, Rational(1));
    }
    return out;
  }

  const Presentation& g_;
  int p_;
  int n_ = 0;
  ContextPtr rctx_;
  std::vector<std::vector<std::vector<int>>> subsets_;
  std::map<int, SliceModule> slice_cache_;
  std::map<int, PresComplex> full_cache_, trunc_cache_;
  std::map<std::tuple<bool, int, int>, HomologyAt> hom_cache_;
};

struct StabilizedHomology {
  HomologyAt h;
  int k = -1;
  bool capped = false;
  std::string last_two;
};

/// The value at the first k whose two following transitions induce
/// isomorphisms on homology at `level`, confirmed against the scale-aware
/// truncation K = min(max(k+2, floor), k_cap) by the composite transition.
/// The confirmation step is what makes early detections sound: the reported
/// value is linked by an isomorphism to the value at cap scale.
StabilizedHomology stabilize_level(TruncationBuilder& tb, bool truncated, int level, int k_cap) {
  StabilizedHomology out;
  const int floor = tb.scale_floor();
  for (int k = 2; k + 2 <= k_cap; ++k) {
    const PresComplex& c0 = truncated ? tb.trunc_cached(k) : tb.full_cached(k);
    const PresComplex& c1 = truncated ? tb.trunc_cached(k + 1) : tb.full_cached(k + 1);
    const HomologyAt& h0 = tb.homology_cached(truncated, k, level);
    const HomologyAt& h1 = tb.homology_cached(truncated, k + 1, level);
    PolyMatrix t1 = truncated ? tb.transition_trunc(k, level) : tb.transition(k, level);
    PolyMatrix u1 = induced_on_homology(c0, level, h0, c1, h1, t1);
    if (!map_is_iso(tb.rctx(), h0.pres, h1.pres, u1)) continue;
    const PresComplex& c2 = truncated ? tb.trunc_cached(k + 2) : tb.full_cached(k + 2);
    const HomologyAt& h2 = tb.homology_cached(truncated, k + 2, level);
    PolyMatrix t2 = truncated ? tb.transition_trunc(k + 1, level) : tb.transition(k + 1, level);
    PolyMatrix u2 = induced_on_homology(c1, level, h1, c2, h2, t2);
    if (!map_is_iso(tb.rctx(), h1.pres, h2.pres, u2)) continue;
    int confirm = std::min(std::max(k + 2, floor), k_cap);
    if (confirm > k + 2) {
      const PresComplex& cf = truncated ? tb.trunc_cached(confirm) : tb.full_cached(confirm);
      const HomologyAt& hf = tb.homology_cached(truncated, confirm, level);
      PolyMatrix tc =
          truncated ? tb.transition_to_trunc(k, confirm, level) : tb.transition_to(k, confirm, level);
      PolyMatrix uc = induced_on_homology(c0, level, h0, cf, hf, tc);
      if (!map_is_iso(tb.rctx(), h0.pres, hf.pres, uc)) continue;
    }
    out.h = h0;
    out.k = k;
    return out;
  }
  out.capped = true;
  std::ostringstream os;
  if (k_cap >= 3) {
    const HomologyAt& ha = tb.homology_cached(truncated, k_cap - 1, level);
    const HomologyAt& hb = tb.homology_cached(truncated, k_cap, level);
    os << "k=" << (k_cap - 1) << ": " << summarize(node_as_slice(tb.rctx(), ha.pres)).str()
       << "; k=" << k_cap << ": " << summarize(node_as_slice(tb.rctx(), hb.pres)).str();
  }
  out.last_two = os.str();
  return out;
}

/// Express ambient vectors in homology coordinates (they must be cocycles).
PolyMatrix express_in_homology(const PresComplex& cx, int level, const HomologyAt& h,
                               const std::vector<FreeElement>& vectors) {
  const PresNode* node = cx.node(level);
  PolyMatrix identity(cx.ctx, node->rank(), node->rank());
  for (int i = 0; i < node->rank(); ++i) identity.at(i, i) = Polynomial(cx.ctx, Rational(1));
  HomologyAt fake;
  fake.cocycles = vectors;
  for (const auto& v : vectors) {
    auto d = v.degree(node->gen_twists);
    fake.pres.gen_twists.push_back(d.value_or(0));
  }
  return induced_on_homology(cx, level, fake, cx, h, identity);
}

/// Does every column of the matrix lie in the relation span of the target
/// presentation (i.e. is the induced map zero)?
bool map_is_zero(const ContextPtr& ctx, const PresNode& target, const PolyMatrix& map) {
  if (ctx->total_vars() == 0) {
    QReducer red;
    for (const auto& r : target.rels) {
      QVec v;
      for (const auto& [c, poly] : r.components()) v.emplace(c, poly.constant_coefficient());
      red.insert(std::move(v));
    }
    for (int c = 0; c < map.cols(); ++c) {
      QVec v;
      for (int r = 0; r < map.rows(); ++r) {
        Rational q = map.at(r, c).constant_coefficient();
        if (!is_zero(q)) v.emplace(r, q);
      }
      if (!red.in_span(v)) return false;
    }
    return true;
  }
  if (target.rels.empty()) return map.is_zero();
  ModuleOrder ord;
  ord.twists = target.gen_twists;
  auto gb = buchberger(target.rels, ord);
  for (int c = 0; c < map.cols(); ++c) {
    FreeElement col = map.column(c);
    if (col.is_zero()) continue;
    if (!normal_form(col, gb).is_zero()) return false;
  }
  return true;
}

/// Smallest K such that every level of the full complex (and hence of the
/// truncated one, whose levels are full levels 1..n) has isomorphic
/// transitions K -> K+1 -> K+2, confirmed at scale as in stabilize_level.
int common_stable_k(TruncationBuilder& tb, int k_cap, std::string* last_two) {
  const int n = tb.levels();
  const int floor = tb.scale_floor();
  for (int k = 2; k + 2 <= k_cap; ++k) {
    bool all = true;
    for (int step = 0; step < 2 && all; ++step) {
      for (int lvl = 0; lvl <= n && all; ++lvl) {
        PolyMatrix t = tb.transition(k + step, lvl);
        PolyMatrix u = induced_on_homology(
            tb.full_cached(k + step), lvl, tb.homology_cached(false, k + step, lvl),
            tb.full_cached(k + step + 1), tb.homology_cached(false, k + step + 1, lvl), t);
        if (!map_is_iso(tb.rctx(), tb.homology_cached(false, k + step, lvl).pres,
                        tb.homology_cached(false, k + step + 1, lvl).pres, u))
          all = false;
      }
    }
    if (!all) continue;
    int confirm = std::min(std::max(k + 2, floor), k_cap);
    if (confirm > k + 2) {
      for (int lvl = 0; lvl <= n && all; ++lvl) {
        PolyMatrix tc = tb.transition_to(k, confirm, lvl);
        PolyMatrix uc = induced_on_homology(tb.full_cached(k), lvl,
                                            tb.homology_cached(false, k, lvl),
                                            tb.full_cached(confirm),
                                            tb.homology_cached(false, confirm, lvl), tc);
        if (!map_is_iso(tb.rctx(), tb.homology_cached(false, k, lvl).pres,
                        tb.homology_cached(false, confirm, lvl).pres, uc))
          all = false;
      }
    }
    if (all) return k;
  }
  if (last_two && k_cap >= 3) {
    std::ostringstream os;
    os << "H^0 at last two truncations: "
       << summarize(node_as_slice(tb.rctx(), tb.homology_cached(false, k_cap - 1, 0).pres)).str()
       << " ; "
       << summarize(node_as_slice(tb.rctx(), tb.homology_cached(false, k_cap, 0).pres)).str();
    *last_two = os.str();
  }
  return -1;
}

}  // namespace

SliceModule lc_koszul_limit_route(const Presentation& g, int i, int p, int k_cap,
                                  RouteDiagnostics* diag) {
  const int n = g.context()->fiber_vars();
  if (k_cap < 2) throw InputError("k_cap must be at least 2");
  if (i < 0 || i > n) {
    SliceModule s;
    s.rctx = base_ring_of(g.context());
    if (diag) *diag = RouteDiagnostics{0, false};
    return s;
  }
  TruncationBuilder tb(g, p);
  StabilizedHomology sh = stabilize_level(tb, false, i, k_cap);
  if (sh.capped)
    throw StabilizationCapError("koszul-limit route hit k_cap=" + std::to_string(k_cap) +
                                    " at (i=" + std::to_string(i) + ", p=" + std::to_string(p) +
                                    ")",
                                sh.last_two);
  if (diag) *diag = RouteDiagnostics{sh.k, false};
  return node_as_slice(tb.rctx(), sh.h.pres);
}

SliceModule cech_sheaf_route(const Presentation& g, int j, int p, int k_cap,
                             RouteDiagnostics* diag) {
  const int n = g.context()->fiber_vars();
  if (k_cap < 2) throw InputError("k_cap must be at least 2");
  if (j < 0 || j > n - 1) {
    SliceModule s;
    s.rctx = base_ring_of(g.context());
    if (diag) *diag = RouteDiagnostics{0, false};
    return s;
  }
  TruncationBuilder tb(g, p);
  StabilizedHomology sh = stabilize_level(tb, true, j, k_cap);
  if (sh.capped)
    throw StabilizationCapError("cech route hit k_cap=" + std::to_string(k_cap) +
                                    " at (j=" + std::to_string(j) + ", p=" + std::to_string(p) +
                                    ")",
                                sh.last_two);
  if (diag) *diag = RouteDiagnostics{sh.k, false};
  return node_as_slice(tb.rctx(), sh.h.pres);
}

HomologyAt gamma_torsion_slice(const Presentation& g, int p, int k_cap, RouteDiagnostics* diag) {
  if (k_cap < 2) throw InputError("k_cap must be at least 2");
  TruncationBuilder tb(g, p);
  StabilizedHomology sh = stabilize_level(tb, false, 0, k_cap);
  if (sh.capped)
    throw StabilizationCapError(
        "torsion kernel hit k_cap=" + std::to_string(k_cap) + " at p=" + std::to_string(p),
        sh.last_two);
  if (diag) *diag = RouteDiagnostics{sh.k, false};
  return sh.h;
}

LesReport les_check(const Presentation& g, int p_lo, int p_hi, int k_cap) {
  const int n = g.context()->fiber_vars();
  const ContextPtr rctx = base_ring_of(g.context());
  LesReport report;

  for (int p = p_lo; p <= p_hi; ++p) {
    LesNode node;
    node.p = p;
    TruncationBuilder tb(g, p);
    std::string last_two;
    int k = common_stable_k(tb, k_cap, &last_two);
    if (k < 0)
      throw StabilizationCapError(
          "les_check hit k_cap=" + std::to_string(k_cap) + " at p=" + std::to_string(p), last_two);
    node.stabilized_k = k;

    PresComplex full = tb.full(k);
    PresComplex trunc = tb.trunc(k);
    HomologyAt h0t = homology_at(full, 0);
    HomologyAt h1t = homology_at(full, 1);
    HomologyAt h0c = homology_at(trunc, 0);
    const SliceModule& gp = tb.slice_at(p);
    PresNode gp_node = PresNode::from_slice(gp);

    node.gamma = summarize(node_as_slice(rctx, h0t.pres));
    node.module = summarize(gp);
    node.direct_image = summarize(node_as_slice(rctx, h0c.pres));
    node.h1 = summarize(node_as_slice(rctx, h1t.pres));
    for (int i = 2; i <= n; ++i)
      node.higher.push_back(summarize(node_as_slice(rctx, homology_at(full, i).pres)));

    // alpha: H^0(T) -> G_p, cocycle representatives as columns
    PolyMatrix alpha = PolyMatrix::from_columns(rctx, gp.ambient_rank(), h0t.cocycles);
    // beta: G_p -> H^0(C), the colimit insertion in cohomology coordinates
    PolyMatrix beta = express_in_homology(trunc, 0, h0c, tb.beta_chain(k).columns());
    // gamma: H^0(C) -> H^1(T), representatives reread as T^1 cocycles
    PolyMatrix gamma = express_in_homology(full, 1, h1t, h0c.cocycles);

    bool ok = true;
    std::string why;
    if (!map_is_injective(rctx, h0t.pres, gp_node, alpha)) {
      ok = false;
      why = "alpha not injective";
    }
    if (ok) {
      PresComplex chain;
      chain.ctx = rctx;
      chain.lo = 0;
      chain.nodes = {h0t.pres, gp_node, h0c.pres};
      chain.maps = {alpha, beta};
      if (!node_is_zero(rctx, homology_at(chain, 1).pres)) {
        ok = false;
        why = "not exact at the module";
      }
    }
    if (ok) {
      PresComplex chain;
      chain.ctx = rctx;
      chain.lo = 0;
      chain.nodes = {gp_node, h0c.pres, h1t.pres};
      chain.maps = {beta, gamma};
      if (!node_is_zero(rctx, homology_at(chain, 1).pres)) {
        ok = false;
        why = "not exact at the direct image";
      }
    }
    if (ok && !map_is_surjective(rctx, h1t.pres, gamma)) {
      ok = false;
      why = "gamma not surjective";
    }
    for (int i = 2; ok && i <= n; ++i) {
      HomologyAt hc = homology_at(trunc, i - 1);
      HomologyAt ht = homology_at(full, i);
      PolyMatrix iso = express_in_homology(full, i, ht, hc.cocycles);
      if (!map_is_iso(rctx, hc.pres, ht.pres, iso)) {
        ok = false;
        why = "direct image vs H^i mismatch at i=" + std::to_string(i);
      }
    }

    node.exact = ok;
    node.failure = why;
    node.alpha_zero = node.gamma.is_zero();
    node.gamma_zero = node.h1.is_zero();
    node.beta_bijective = map_is_iso(rctx, gp_node, h0c.pres, beta);
    node.beta_zero = map_is_zero(rctx, h0c.pres, beta);
    node.gamma_bijective = map_is_iso(rctx, h0c.pres, h1t.pres, gamma);

    if (!ok) report.exact = false;
    report.nodes.push_back(std::move(node));
  }

  if (!report.nodes.empty()) {
    const LesNode& top = report.nodes.back();
    report.top_regime = top.alpha_zero && top.beta_bijective && top.gamma_zero;
    const LesNode& bottom = report.nodes.front();
    report.bottom_regime = bottom.alpha_zero && bottom.beta_zero && bottom.gamma_bijective;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Tables
// ---------------------------------------------------------------------------

int default_k_cap(const Presentation& g, int p_lo, int p_hi) {
  int span = p_hi - p_lo;
  int tmin = 0, tmax = 0;
  for (int t : g.f0().twists) {
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  for (int t : g.f1().twists) {
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  return span + (tmax - tmin) + g.context()->fiber_vars() + 2;
}

LocalCohomologyTable local_cohomology_table(const Presentation& g, const std::string& route,
                                            int p_lo, int p_hi, int k_cap) {
  const int n = g.context()->fiber_vars();
  LocalCohomologyTable table;
  bool want_res = route == "res" || route == "all";
  bool want_koszul = route == "koszul" || route == "all";
  bool want_cech = route == "cech" || route == "all";
  if (!want_res && !want_koszul && !want_cech)
    throw InputError("unknown route '" + route + "'");

  std::optional<ResolutionCert> res;
  if (want_res) res = free_resolution(g, true);

  for (int p = p_lo; p <= p_hi; ++p) {
    std::map<int, ModuleSummary> res_vals, koszul_vals;
    if (want_res) {
      SlicedComplex icx = inverse_poly_slice_complex(res->cx, p);
      for (int i = 0; i <= n; ++i) {
        SliceModule s = node_as_slice(icx.pres.ctx, homology_at(icx.pres, i - n).pres);
        ModuleSummary val = summarize(s);
        res_vals.emplace(i, val);
        table.entries.push_back(TableEntry{"res", i, p, std::move(val), -1});
      }
    }
    if (want_koszul || want_cech) {
      TruncationBuilder tb(g, p);
      if (want_koszul) {
        for (int i = 0; i <= n; ++i) {
          StabilizedHomology sh = stabilize_level(tb, false, i, k_cap);
          if (sh.capped)
            throw StabilizationCapError("koszul-limit route hit k_cap=" + std::to_string(k_cap) +
                                            " at (i=" + std::to_string(i) +
                                            ", p=" + std::to_string(p) + ")",
                                        sh.last_two);
          ModuleSummary val = summarize(node_as_slice(tb.rctx(), sh.h.pres));
          koszul_vals.emplace(i, val);
          table.entries.push_back(TableEntry{"koszul", i, p, std::move(val), sh.k});
        }
      }
      if (want_cech) {
        for (int j = 0; j <= n - 1; ++j) {
          StabilizedHomology sh = stabilize_level(tb, true, j, k_cap);
          if (sh.capped)
            throw StabilizationCapError("cech route hit k_cap=" + std::to_string(k_cap) +
                                            " at (j=" + std::to_string(j) +
                                            ", p=" + std::to_string(p) + ")",
                                        sh.last_two);
          ModuleSummary val = summarize(node_as_slice(tb.rctx(), sh.h.pres));
          if (want_koszul && j >= 1) {
            auto it = koszul_vals.find(j + 1);
            if (it != koszul_vals.end() && !(it->second == val)) {
              table.routes_agree = false;
              table.disagreement = "cech R^" + std::to_string(j) + " vs H^" +
                                   std::to_string(j + 1) + " at p=" + std::to_string(p);
            }
          }
          table.entries.push_back(TableEntry{"cech", j, p, std::move(val), sh.k});
        }
      }
    }
    if (want_res && want_koszul) {
      for (int i = 0; i <= n; ++i) {
        if (!(res_vals.at(i) == koszul_vals.at(i))) {
          table.routes_agree = false;
          table.disagreement =
              "res vs koszul at (i=" + std::to_string(i) + ", p=" + std::to_string(p) + ")";
        }
      }
    }
  }

  std::sort(table.entries.begin(), table.entries.end(),
            [](const TableEntry& a, const TableEntry& b) {
              if (a.route != b.route) return a.route < b.route;
              if (a.i != b.i) return a.i < b.i;
              return a.p < b.p;
            });
  return table;
}

}  // namespace gdl
