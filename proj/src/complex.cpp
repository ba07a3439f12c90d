#include "gdl/complex.hpp"

#include <algorithm>
#include <map>

namespace gdl {

void validate_complex(const FreeComplex& cx) {
  for (int i = cx.lo; i <= cx.hi(); ++i) {
    const PolyMatrix* d = cx.diff(i);
    if (!d) continue;
    const GradedFreeModule* src = cx.comp(i);
    const GradedFreeModule* tgt = cx.comp(i + 1);
    if (!tgt || d->rows() != tgt->rank() || d->cols() != src->rank())
      throw InternalError("complex differential shape mismatch at index " + std::to_string(i));
    for (int c = 0; c < d->cols(); ++c)
      for (int r = 0; r < d->rows(); ++r) {
        const Polynomial& e = d->at(r, c);
        if (e.is_zero()) continue;
        auto deg = e.xi_degree();
        if (!deg || *deg != src->twists[c] - tgt->twists[r])
          throw InternalError("complex differential not homogeneous at index " +
                              std::to_string(i));
      }
    const PolyMatrix* d2 = cx.diff(i + 1);
    if (d2 && !(*d2 * *d).is_zero())
      throw InternalError("d o d != 0 at index " + std::to_string(i));
  }
}

namespace {

std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // lexicographic enumeration of sorted k-subsets of {0..n-1}
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

FreeComplex koszul_resolution(const ContextPtr& ctx) {
  const int n = ctx->fiber_vars();
  if (n < 1) throw InputError("koszul_resolution needs at least one graded variable");
  FreeComplex cx;
  cx.ctx = ctx;
  cx.lo = -n;
  std::vector<std::vector<std::vector<int>>> subsets(n + 1);
  std::vector<std::map<std::vector<int>, int>> index(n + 1);
  for (int k = 0; k <= n; ++k) {
    subsets[k] = subsets_of_size(n, k);
    for (size_t t = 0; t < subsets[k].size(); ++t) index[k].emplace(subsets[k][t], static_cast<int>(t));
    // component at index -k: generators e_J in degree k
  }
  for (int i = -n; i <= 0; ++i) {
    int k = -i;
    cx.comps.emplace_back(std::vector<int>(subsets[k].size(), k));
  }
  for (int i = -n; i < 0; ++i) {
    int k = -i;  // source subsets of size k, target of size k-1
    PolyMatrix d(ctx, static_cast<int>(subsets[k - 1].size()), static_cast<int>(subsets[k].size()));
    for (size_t c = 0; c < subsets[k].size(); ++c) {
      const auto& J = subsets[k][c];
      for (int t = 0; t < k; ++t) {
        std::vector<int> J2 = J;
        J2.erase(J2.begin() + t);
        int r = index[k - 1].at(J2);
        Rational sign((t % 2 == 0) ? 1 : -1);
        d.at(r, static_cast<int>(c)) = Polynomial(ctx, fiber_var(*ctx, J[t]), sign);
      }
    }
    cx.diffs.push_back(std::move(d));
  }
  return cx;
}

FreeComplex dual_complex(const FreeComplex& l, int homological_shift) {
  FreeComplex out;
  out.ctx = l.ctx;
  out.lo = -l.hi() - homological_shift;
  const int out_hi = -l.lo - homological_shift;
  for (int i = out.lo; i <= out_hi; ++i) {
    const GradedFreeModule* src = l.comp(-i - homological_shift);
    out.comps.push_back(src ? src->dual() : GradedFreeModule{});
  }
  for (int i = out.lo; i < out_hi; ++i) {
    // out differential i -> i+1 is the transpose of the L map
    // (-i-1-shift) -> (-i-shift), with sign (-1)^i.
    const PolyMatrix* d = l.diff(-i - 1 - homological_shift);
    if (!d) {
      out.diffs.emplace_back(out.ctx, out.rank_at(i + 1), out.rank_at(i));
      continue;
    }
    PolyMatrix t = d->transpose();
    if (((i % 2) + 2) % 2 == 1) t = t.scaled(Rational(-1));
    out.diffs.push_back(std::move(t));
  }
  return out;
}

void minimize_complex(FreeComplex& cx) {
  for (;;) {
    // candidate pivot: nonzero constant entry, smallest generator degree first
    int best_t = -1, best_r = -1, best_c = -1, best_deg = 0;
    for (size_t t = 0; t < cx.diffs.size(); ++t) {
      const PolyMatrix& m = cx.diffs[t];
      for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r) {
          const Polynomial& e = m.at(r, c);
          if (e.is_zero() || !e.is_constant()) continue;
          int deg = cx.comps[t].twists[c];
          if (best_t < 0 || deg < best_deg) {
            best_t = static_cast<int>(t);
            best_r = r;
            best_c = c;
            best_deg = deg;
          }
        }
    }
    if (best_t < 0) return;
    const int t = best_t, r = best_r, c = best_c;
    PolyMatrix& m = cx.diffs[t];
    const Rational u = m.at(r, c).constant_coefficient();

    // column operations killing row r outside the pivot
    std::vector<Polynomial> lambda;
    for (int c2 = 0; c2 < m.cols(); ++c2)
      lambda.push_back(c2 == c ? Polynomial(cx.ctx) : m.at(r, c2) * (1 / u));
    for (int c2 = 0; c2 < m.cols(); ++c2) {
      if (c2 == c || lambda[c2].is_zero()) continue;
      for (int r2 = 0; r2 < m.rows(); ++r2) m.at(r2, c2) -= lambda[c2] * m.at(r2, c);
    }
    if (t > 0) {
      PolyMatrix& p = cx.diffs[t - 1];
      for (int c2 = 0; c2 < m.cols(); ++c2) {
        if (c2 == c || lambda[c2].is_zero()) continue;
        for (int k = 0; k < p.cols(); ++k) p.at(c, k) += lambda[c2] * p.at(c2, k);
      }
    }
    // row operations killing column c outside the pivot
    std::vector<Polynomial> mu;
    for (int r2 = 0; r2 < m.rows(); ++r2)
      mu.push_back(r2 == r ? Polynomial(cx.ctx) : m.at(r2, c) * (1 / u));
    if (t + 1 < static_cast<int>(cx.diffs.size())) {
      PolyMatrix& nxt = cx.diffs[t + 1];
      for (int r2 = 0; r2 < m.rows(); ++r2) {
        if (r2 == r || mu[r2].is_zero()) continue;
        for (int k = 0; k < nxt.rows(); ++k) nxt.at(k, r) += mu[r2] * nxt.at(k, r2);
      }
    }
    for (int r2 = 0; r2 < m.rows(); ++r2) {
      if (r2 == r) continue;
      m.at(r2, c) = Polynomial(cx.ctx);
    }

    // delete generator c at level t and generator r at level t+1
    auto drop_twist = [](GradedFreeModule& f, int idx) { f.twists.erase(f.twists.begin() + idx); };
    auto drop_row = [&](PolyMatrix& a, int row) {
      PolyMatrix out(cx.ctx, a.rows() - 1, a.cols());
      for (int rr = 0, ro = 0; rr < a.rows(); ++rr) {
        if (rr == row) continue;
        for (int cc = 0; cc < a.cols(); ++cc) out.at(ro, cc) = a.at(rr, cc);
        ++ro;
      }
      a = std::move(out);
    };
    auto drop_col = [&](PolyMatrix& a, int col) {
      PolyMatrix out(cx.ctx, a.rows(), a.cols() - 1);
      for (int cc = 0, co = 0; cc < a.cols(); ++cc) {
        if (cc == col) continue;
        for (int rr = 0; rr < a.rows(); ++rr) out.at(rr, co) = a.at(rr, cc);
        ++co;
      }
      a = std::move(out);
    };
    drop_col(m, c);
    drop_row(m, r);
    drop_twist(cx.comps[t], c);
    drop_twist(cx.comps[t + 1], r);
    if (t > 0) drop_row(cx.diffs[t - 1], c);
    if (t + 1 < static_cast<int>(cx.diffs.size())) drop_col(cx.diffs[t + 1], r);
  }
}

namespace {

/// Strike nonzero constant entries of a freshly appended differential
/// m: src_level -> tgt_level by row/column operations. The fresh level has
/// no incoming map yet, so only the map out of the target level needs
/// adjusting.
void cancel_fresh_step(const ContextPtr& ctx, PolyMatrix& m, PolyMatrix* out_of_target,
                       GradedFreeModule& src_level, GradedFreeModule& tgt_level) {
  for (;;) {
    int pr = -1, pc = -1;
    for (int c = 0; c < m.cols() && pr < 0; ++c)
      for (int r = 0; r < m.rows() && pr < 0; ++r) {
        const Polynomial& e = m.at(r, c);
        if (!e.is_zero() && e.is_constant()) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) return;
    const Rational u = m.at(pr, pc).constant_coefficient();
    for (int c2 = 0; c2 < m.cols(); ++c2) {
      if (c2 == pc) continue;
      Polynomial lambda = m.at(pr, c2) * (1 / u);
      if (lambda.is_zero()) continue;
      for (int r2 = 0; r2 < m.rows(); ++r2) m.at(r2, c2) -= lambda * m.at(r2, pc);
    }
    if (out_of_target) {
      for (int r2 = 0; r2 < m.rows(); ++r2) {
        if (r2 == pr) continue;
        Polynomial mu = m.at(r2, pc) * (1 / u);
        if (mu.is_zero()) continue;
        for (int k = 0; k < out_of_target->rows(); ++k)
          out_of_target->at(k, pr) += mu * out_of_target->at(k, r2);
      }
    }
    PolyMatrix smaller(ctx, m.rows() - 1, m.cols() - 1);
    for (int r2 = 0, ro = 0; r2 < m.rows(); ++r2) {
      if (r2 == pr) continue;
      for (int c2 = 0, co = 0; c2 < m.cols(); ++c2) {
        if (c2 == pc) continue;
        smaller.at(ro, co) = m.at(r2, c2);
        ++co;
      }
      ++ro;
    }
    m = std::move(smaller);
    src_level.twists.erase(src_level.twists.begin() + pc);
    tgt_level.twists.erase(tgt_level.twists.begin() + pr);
    if (out_of_target) {
      PolyMatrix shrunk(ctx, out_of_target->rows(), out_of_target->cols() - 1);
      for (int c2 = 0, co = 0; c2 < out_of_target->cols(); ++c2) {
        if (c2 == pr) continue;
        for (int r2 = 0; r2 < out_of_target->rows(); ++r2)
          shrunk.at(r2, co) = out_of_target->at(r2, c2);
        ++co;
      }
      *out_of_target = std::move(shrunk);
    }
  }
}

}  // namespace

ResolutionCert free_resolution(const Presentation& g, bool minimize) {
  const ContextPtr& ctx = g.context();
  ResolutionCert cert;
  cert.cx.ctx = ctx;

  // Each level carries an interreduced Groebner basis of the previous
  // kernel; the next level is built from its Schreyer syzygies. With the
  // minimize flag, constant entries are cancelled as soon as a level is
  // appended, which keeps the tower near-minimal while it grows.
  std::vector<FreeElement> raw;
  for (int j = 0; j < g.f1().rank(); ++j) {
    FreeElement col = g.phi().column(j);
    if (!col.is_zero()) raw.push_back(std::move(col));
  }

  std::vector<GradedFreeModule> levels{g.f0()};
  std::vector<PolyMatrix> maps;  // maps[k]: level k+1 -> level k

  ModuleOrder ord;
  ord.twists = g.f0().twists;
  std::vector<FreeElement> cur = raw.empty() ? raw : buchberger(raw, ord).gens;
  const int cap = ctx->total_vars() + 4;
  while (!cur.empty()) {
    std::vector<int> degs;
    for (const auto& e : cur) {
      auto d = e.degree(levels.back().twists);
      if (!d) throw InternalError("inhomogeneous generator in free_resolution");
      degs.push_back(*d);
    }
    maps.push_back(PolyMatrix::from_columns(ctx, levels.back().rank(), cur));
    levels.emplace_back(degs);
    if (static_cast<int>(maps.size()) > cap)
      throw InternalError("free_resolution exceeded the syzygy length bound");
    if (minimize)
      cancel_fresh_step(ctx, maps.back(),
                        maps.size() >= 2 ? &maps[maps.size() - 2] : nullptr,
                        levels.back(), levels[levels.size() - 2]);

    std::vector<FreeElement> cols = maps.back().columns();
    bool any_nonzero = false;
    for (const auto& c : cols)
      if (!c.is_zero()) any_nonzero = true;
    if (cols.empty() || !any_nonzero) {
      if (!any_nonzero) {
        levels.pop_back();
        maps.pop_back();
      }
      break;
    }
    ModuleOrder cur_ord;
    cur_ord.twists = levels[levels.size() - 2].twists;
    auto syz_all = syzygies(cols, cur_ord);
    std::vector<FreeElement> syz;
    for (auto& s : syz_all)
      if (!s.is_zero()) syz.push_back(std::move(s));
    if (syz.empty()) break;
    ModuleOrder next_ord;
    next_ord.twists = levels.back().twists;
    cur = buchberger(syz, next_ord).gens;
  }

  // assemble with cohomological indices <= 0
  cert.cx.lo = -(static_cast<int>(levels.size()) - 1);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) cert.cx.comps.push_back(*it);
  for (auto it = maps.rbegin(); it != maps.rend(); ++it) cert.cx.diffs.push_back(*it);
  if (minimize) minimize_complex(cert.cx);
  return cert;
}

SlicedComplex slice_complex(const FreeComplex& cx, int p) {
  SlicedComplex out;
  out.pres.ctx = base_ring_of(cx.ctx);
  out.pres.lo = cx.lo;

  const int m = cx.ctx->base_vars();
  const int t = cx.ctx->total_vars();
  std::vector<std::map<std::pair<int, std::vector<int>>, int>> index;
  for (int i = cx.lo; i <= cx.hi(); ++i) {
    auto basis = slice_basis(*cx.ctx, *cx.comp(i), p);
    std::map<std::pair<int, std::vector<int>>, int> idx;
    for (size_t r = 0; r < basis.size(); ++r)
      idx.emplace(std::make_pair(basis[r].comp, basis[r].mono.exps()), static_cast<int>(r));
    out.pres.nodes.push_back(PresNode::free_node(std::vector<int>(basis.size(), 0)));
    out.labels.push_back(std::move(basis));
    index.push_back(std::move(idx));
  }
  for (int i = cx.lo; i < cx.hi(); ++i) {
    const PolyMatrix* d = cx.diff(i);
    const auto& src = out.labels[i - cx.lo];
    const auto& tgt_index = index[i + 1 - cx.lo];
    PolyMatrix sliced(out.pres.ctx, static_cast<int>(out.labels[i + 1 - cx.lo].size()),
                      static_cast<int>(src.size()));
    for (size_t c = 0; c < src.size(); ++c) {
      for (int r = 0; r < d->rows(); ++r) {
        const Polynomial& entry = d->at(r, src[c].comp);
        for (const auto& [mono, coef] : entry.terms()) {
          std::vector<int> target(t, 0);
          for (int v = m; v < t; ++v) target[v] = mono[v] + src[c].mono[v];
          auto it = tgt_index.find(std::make_pair(r, target));
          if (it == tgt_index.end())
            throw InternalError("slice_complex: image monomial missing from slice basis");
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

PresNode cohomology_presentation(const FreeComplex& cx, int j) {
  PresComplex pc;
  pc.ctx = cx.ctx;
  pc.lo = cx.lo;
  for (int i = cx.lo; i <= cx.hi(); ++i)
    pc.nodes.push_back(PresNode::free_node(cx.comp(i)->twists));
  pc.maps = cx.diffs;
  return homology_at(pc, j).pres;
}

SliceModule cohomology_slice(const FreeComplex& cx, int j, int p) {
  if (!cx.in_range(j)) {
    SliceModule s;
    s.rctx = base_ring_of(cx.ctx);
    return s;
  }
  SlicedComplex sc = slice_complex(cx, p);
  HomologyAt h = homology_at(sc.pres, j);
  return node_as_slice(sc.pres.ctx, h.pres);
}

bool verify_resolution(const ResolutionCert& cert, const Presentation& g, int lo, int hi) {
  for (int p = lo; p <= hi; ++p) {
    SlicedComplex sc = slice_complex(cert.cx, p);
    for (int j = cert.cx.lo; j < 0; ++j) {
      HomologyAt h = homology_at(sc.pres, j);
      if (!node_is_zero(sc.pres.ctx, h.pres)) return false;
    }
    HomologyAt h0 = homology_at(sc.pres, 0);
    SliceModule got = node_as_slice(sc.pres.ctx, h0.pres);
    SliceModule want = slice(g, p);
    if (g.context()->base_vars() == 0) {
      if (qdim(got) != qdim(want)) return false;
    } else if (g.context()->base_vars() == 1) {
      if (!(invariants(got) == invariants(want))) return false;
    } else {
      if (hilbert_function(got, 0, 8) != hilbert_function(want, 0, 8)) return false;
    }
  }
  return true;
}

SliceModule ext_over_A(const Presentation& g, int j, int p, bool minimize) {
  ResolutionCert res = free_resolution(g, minimize);
  FreeComplex dual = dual_complex(res.cx, g.context()->fiber_vars());
  return cohomology_slice(dual, j, p);
}

SliceModule ext_over_R(const SliceModule& m, int j) {
  if (j < 0) {
    SliceModule s;
    s.rctx = m.rctx;
    return s;
  }
  Presentation pres = slice_as_presentation(m);
  ResolutionCert res = free_resolution(pres, true);
  FreeComplex dual = dual_complex(res.cx, 0);
  PresNode h = cohomology_presentation(dual, j);
  return node_as_slice(m.rctx, h);
}

}  // namespace gdl
