#include "gdl/grobner.hpp"

#include <algorithm>
#include <set>

namespace gdl {

namespace {

struct PairKey {
  int deg;  // grading degree of the S-pair lcm (twist-adjusted)
  int i, j;
  bool operator<(const PairKey& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (j != o.j) return j < o.j;
    return i < o.i;
  }
};

// coordinate rows are sparse elements over the original-generator index space
struct Engine {
  ContextPtr ctx;
  ModuleOrder order;
  bool track = false;

  Engine(ContextPtr c, ModuleOrder o, bool t) : ctx(std::move(c)), order(std::move(o)), track(t) {}

  std::vector<FreeElement> basis;   // grows during the run, never shrinks
  std::vector<ModuleTerm> leads;    // cached leading terms (monic: coef 1)
  std::vector<FreeElement> coords;  // basis[k] = sum coords[k] * originals
  std::vector<FreeElement> syz;     // syzygies in original coordinates
  std::set<PairKey> queue;
  std::set<std::pair<int, int>> done;

  void push_pairs(int k) {
    for (int i = 0; i < k; ++i) {
      if (leads[i].comp != leads[k].comp) continue;
      Monomial lcm = Monomial::lcm(leads[i].mono, leads[k].mono);
      queue.insert({lcm.xi_degree(*ctx) + order.twist(leads[k].comp), i, k});
    }
  }

  int find_reducer(int comp, const Monomial& mono) const {
    for (size_t k = 0; k < basis.size(); ++k)
      if (leads[k].comp == comp && leads[k].mono.divides(mono)) return static_cast<int>(k);
    return -1;
  }

  /// Fully reduce e against the basis. On return
  /// (original e) = sum q[k]*basis[k] + e and no term of e is divisible by
  /// any basis lead. When `coord` is given it is updated by the same
  /// combination through the tracked coordinates.
  void reduce_full(FreeElement& e, std::vector<Polynomial>* q, FreeElement* coord) const {
    FreeElement rem(ctx);
    while (!e.is_zero()) {
      ModuleTerm lt = e.leading_term(order);
      int k = find_reducer(lt.comp, lt.mono);
      if (k < 0) {
        rem.add_term(lt.comp, lt.mono, lt.coef);
        e.add_term(lt.comp, lt.mono, -lt.coef);
        continue;
      }
      Monomial mu = leads[k].mono.quotient_into(lt.mono);
      e.axpy(-lt.coef, mu, basis[k]);
      if (q) (*q)[k].add_term(mu, lt.coef);
      if (coord) coord->axpy(-lt.coef, mu, coords[k]);
    }
    e = std::move(rem);
  }

  void append(FreeElement g, FreeElement coord) {
    ModuleTerm lt = g.leading_term(order);
    Rational inv = 1 / lt.coef;
    g = g * inv;
    if (track) coord = coord * inv;
    lt.coef = 1;
    basis.push_back(std::move(g));
    leads.push_back(std::move(lt));
    coords.push_back(std::move(coord));
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  // Coprime leads skip an S-pair only in the rank-one situation; the pair's
  // syzygy is then exactly the Koszul syzygy of the two elements, recorded
  // without performing the reduction.
  bool product_criterion(int i, int j) const {
    return basis[i].components().size() == 1 && basis[j].components().size() == 1 &&
           leads[i].mono.coprime(leads[j].mono);
  }

  bool chain_criterion(int i, int j, const Monomial& lcm) const {
    for (size_t k = 0; k < basis.size(); ++k) {
      if (static_cast<int>(k) == i || static_cast<int>(k) == j) continue;
      if (leads[k].comp != leads[i].comp) continue;
      if (!leads[k].mono.divides(lcm)) continue;
      int lo1 = std::min<int>(i, static_cast<int>(k)), hi1 = std::max<int>(i, static_cast<int>(k));
      int lo2 = std::min<int>(j, static_cast<int>(k)), hi2 = std::max<int>(j, static_cast<int>(k));
      if (done.count({lo1, hi1}) && done.count({lo2, hi2})) return true;
    }
    return false;
  }

  void record_syzygy(FreeElement sy) {
    if (!sy.is_zero()) syz.push_back(std::move(sy));
  }

  /// The Koszul syzygy of two rank-one basis elements, in original
  /// coordinates: g_j * coords[i] - g_i * coords[j].
  FreeElement koszul_syzygy(int i, int j) const {
    FreeElement sy(ctx);
    const Polynomial& gi = basis[i].components().begin()->second;
    const Polynomial& gj = basis[j].components().begin()->second;
    for (const auto& [mono, c] : gj.terms()) sy.axpy(c, mono, coords[i]);
    for (const auto& [mono, c] : gi.terms()) sy.axpy(-c, mono, coords[j]);
    return sy;
  }

  void run(const std::vector<FreeElement>& input) {
    const int s = static_cast<int>(input.size());
    for (int i = 0; i < s; ++i) {
      if (input[i].is_zero()) continue;
      FreeElement coord(ctx);
      if (track) coord.add_term(i, unit_monomial(*ctx), Rational(1));
      FreeElement g = input[i];
      reduce_full(g, nullptr, track ? &coord : nullptr);
      if (g.is_zero()) {
        if (track) record_syzygy(std::move(coord));
        continue;
      }
      append(std::move(g), std::move(coord));
    }

    while (!queue.empty()) {
      PairKey pk = *queue.begin();
      queue.erase(queue.begin());
      int i = pk.i, j = pk.j;
      Monomial lcm = Monomial::lcm(leads[i].mono, leads[j].mono);
      if (product_criterion(i, j)) {
        done.insert({i, j});
        if (track) record_syzygy(koszul_syzygy(i, j));
        continue;
      }
      if (chain_criterion(i, j, lcm)) {
        // the skipped pair's syzygy is generated by the retained ones
        done.insert({i, j});
        continue;
      }
      done.insert({i, j});
      Monomial mi = leads[i].mono.quotient_into(lcm);
      Monomial mj = leads[j].mono.quotient_into(lcm);
      FreeElement spoly(ctx);
      spoly.axpy(Rational(1), mi, basis[i]);
      spoly.axpy(Rational(-1), mj, basis[j]);
      FreeElement coord(ctx);
      if (track) {
        coord.axpy(Rational(1), mi, coords[i]);
        coord.axpy(Rational(-1), mj, coords[j]);
      }
      reduce_full(spoly, nullptr, track ? &coord : nullptr);
      if (spoly.is_zero()) {
        if (track) record_syzygy(std::move(coord));
        continue;
      }
      append(std::move(spoly), std::move(coord));
    }
  }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<FreeElement>& gens, const ModuleOrder& order,
                         const GBOptions& opts) {
  GroebnerBasis gb;
  gb.order = order;
  gb.original = gens;
  gb.tracked = opts.track;
  if (gens.empty()) return gb;
  ContextPtr ctx = gens.front().context();
  for (const auto& g : gens) require_same_context(ctx, g.context());
  gb.ctx = ctx;
  const int s = static_cast<int>(gens.size());

  Engine eng{ctx, order, opts.track};
  eng.run(gens);

  if (opts.track) {
    // Syzygies of the originals: the recorded S-pair syzygies of the run
    // basis (Schreyer), already pulled back through `coords`, plus the
    // tautological rows e_i - expr_run(g_i)*coords. When each input entered
    // the basis unchanged the tautological rows vanish identically.
    bool inputs_are_basis = eng.basis.size() == gens.size();
    if (inputs_are_basis)
      for (int k = 0; k < s && inputs_are_basis; ++k) {
        FreeElement expect(ctx);
        expect.add_term(k, unit_monomial(*ctx), Rational(1));
        if (!(eng.coords[k] == expect)) inputs_are_basis = false;
      }
    for (const auto& sy : eng.syz) gb.syzygies_of_original.push_back(sy);
    if (!inputs_are_basis) {
      for (int i = 0; i < s; ++i) {
        FreeElement e = gens[i];
        FreeElement c(ctx);
        c.add_term(i, unit_monomial(*ctx), Rational(1));
        eng.reduce_full(e, nullptr, &c);
        if (!e.is_zero())
          throw InternalError("generator does not reduce to zero modulo its own GB");
        if (!c.is_zero()) gb.syzygies_of_original.push_back(std::move(c));
      }
    }
  }

  // Minimalize: drop elements whose lead is strictly divisible by another
  // lead; among equal leads keep the earliest.
  const size_t run_size = eng.basis.size();
  std::vector<bool> keep(run_size, true);
  for (size_t a = 0; a < run_size; ++a) {
    for (size_t b = 0; b < run_size; ++b) {
      if (a == b || !keep[b]) continue;
      if (eng.leads[b].comp != eng.leads[a].comp) continue;
      if (!eng.leads[b].mono.divides(eng.leads[a].mono)) continue;
      if (eng.leads[a].mono == eng.leads[b].mono && a < b) continue;
      keep[a] = false;
      break;
    }
  }
  std::vector<int> kept;
  for (size_t a = 0; a < run_size; ++a)
    if (keep[a]) kept.push_back(static_cast<int>(a));

  // Tail-reduce the kept elements against each other (canonical output).
  Engine fin{ctx, order, opts.track};
  for (int a : kept) {
    fin.basis.push_back(eng.basis[a]);
    fin.leads.push_back(eng.leads[a]);
    if (opts.track) fin.coords.push_back(eng.coords[a]);
  }
  for (size_t idx = 0; idx < fin.basis.size(); ++idx) {
    int a = kept[idx];
    FreeElement tail = eng.basis[a];
    tail.add_term(eng.leads[a].comp, eng.leads[a].mono, Rational(-1));
    FreeElement coord = opts.track ? fin.coords[idx] : FreeElement(ctx);
    fin.reduce_full(tail, nullptr, opts.track ? &coord : nullptr);
    tail.add_term(eng.leads[a].comp, eng.leads[a].mono, Rational(1));
    fin.basis[idx] = std::move(tail);  // later reductions see the reduced form
    if (opts.track) fin.coords[idx] = std::move(coord);
  }
  gb.gens = fin.basis;
  if (opts.track) {
    for (auto& c : fin.coords) {
      std::vector<Polynomial> row(s, Polynomial(ctx));
      for (const auto& [comp, p] : c.components()) row[comp] = p;
      gb.coords.push_back(std::move(row));
    }
    // expr: originals in terms of the final basis
    for (const auto& g : gens) {
      FreeElement e = g;
      std::vector<Polynomial> q(gb.gens.size(), Polynomial(ctx));
      fin.reduce_full(e, &q, nullptr);
      if (!e.is_zero()) throw InternalError("generator does not reduce to zero modulo its own GB");
      gb.expr.push_back(std::move(q));
    }
  }
  return gb;
}

FreeElement normal_form(const FreeElement& e, const GroebnerBasis& gb,
                        std::vector<Polynomial>* quotients) {
  if (gb.gens.empty()) {
    if (quotients) quotients->clear();
    return e;
  }
  Engine eng{gb.ctx, gb.order, false};
  eng.basis = gb.gens;
  for (const auto& g : gb.gens) eng.leads.push_back(g.leading_term(gb.order));
  FreeElement r = e;
  if (quotients) quotients->assign(gb.gens.size(), Polynomial(gb.ctx));
  eng.reduce_full(r, quotients, nullptr);
  return r;
}

std::optional<std::vector<Polynomial>> member_with_coefficients(
    const FreeElement& e, const std::vector<FreeElement>& gens, const ModuleOrder& order) {
  if (e.is_zero()) return std::vector<Polynomial>(gens.size(), Polynomial(e.context()));
  GBOptions opts;
  opts.track = true;
  GroebnerBasis gb = buchberger(gens, order, opts);
  std::vector<Polynomial> q;
  FreeElement r = normal_form(e, gb, &q);
  if (!r.is_zero()) return std::nullopt;
  std::vector<Polynomial> c(gens.size(), Polynomial(e.context()));
  for (size_t k = 0; k < gb.gens.size(); ++k)
    if (!q[k].is_zero())
      for (size_t i = 0; i < gens.size(); ++i) c[i] += q[k] * gb.coords[k][i];
  return c;
}

std::vector<FreeElement> syzygies(const std::vector<FreeElement>& gens,
                                  const ModuleOrder& order) {
  if (gens.empty()) return {};
  GBOptions opts;
  opts.track = true;
  GroebnerBasis gb = buchberger(gens, order, opts);
  return gb.syzygies_of_original;
}

}  // namespace gdl
