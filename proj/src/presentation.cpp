#include "gdl/presentation.hpp"

#include <cctype>
#include <istream>
#include <map>
#include <sstream>

namespace gdl {

void Presentation::validate() const {
  for (int j = 0; j < f1_.rank(); ++j) {
    for (int i = 0; i < f0_.rank(); ++i) {
      const Polynomial& e = phi_.at(i, j);
      if (e.is_zero()) continue;
      int want = f1_.twists[j] - f0_.twists[i];
      auto d = e.xi_degree();
      if (!d)
        throw InputError("column " + std::to_string(j + 1) + ": entry in row " +
                         std::to_string(i + 1) + " is not homogeneous (expected degree " +
                         std::to_string(want) + ")");
      if (*d != want)
        throw InputError("column " + std::to_string(j + 1) + ": entry in row " +
                         std::to_string(i + 1) + " has grading degree " + std::to_string(*d) +
                         " but twists demand " + std::to_string(want));
    }
  }
}

namespace {

// Infer base-degree weights w_i for the F0 generators and d_j for the F1
// generators so that every matrix entry satisfies xdeg(phi_ij) = d_j - w_i.
// Components untouched by relations get weight 0. Returns nullopt when no
// consistent assignment exists (entries mixed in base degree, or a cycle of
// constraints clashes).
struct BaseWeights {
  std::vector<int> f0, f1;
};

std::optional<BaseWeights> infer_base_weights(const Presentation& g) {
  const int r0 = g.f0().rank(), r1 = g.f1().rank();
  std::vector<std::optional<int>> w(r0), d(r1);
  // entry x-degrees; nullopt where zero, failure on inhomogeneous entries
  std::vector<std::vector<std::optional<int>>> x(r0, std::vector<std::optional<int>>(r1));
  for (int i = 0; i < r0; ++i)
    for (int j = 0; j < r1; ++j) {
      const Polynomial& e = g.phi().at(i, j);
      if (e.is_zero()) continue;
      auto xd = e.x_degree();
      if (!xd) return std::nullopt;
      x[i][j] = xd;
    }
  // propagate over the bipartite constraint graph
  for (int seed = 0; seed < r0; ++seed) {
    if (w[seed]) continue;
    w[seed] = 0;
    std::vector<std::pair<bool, int>> stack{{true, seed}};  // (is_row, idx)
    while (!stack.empty()) {
      auto [is_row, idx] = stack.back();
      stack.pop_back();
      if (is_row) {
        for (int j = 0; j < r1; ++j) {
          if (!x[idx][j]) continue;
          int want = *w[idx] + *x[idx][j];
          if (d[j]) {
            if (*d[j] != want) return std::nullopt;
          } else {
            d[j] = want;
            stack.push_back({false, j});
          }
        }
      } else {
        for (int i = 0; i < r0; ++i) {
          if (!x[i][idx]) continue;
          int want = *d[idx] - *x[i][idx];
          if (w[i]) {
            if (*w[i] != want) return std::nullopt;
          } else {
            w[i] = want;
            stack.push_back({true, i});
          }
        }
      }
    }
  }
  BaseWeights bw;
  for (int i = 0; i < r0; ++i) bw.f0.push_back(w[i].value_or(0));
  for (int j = 0; j < r1; ++j) bw.f1.push_back(d[j].value_or(0));
  return bw;
}

}  // namespace

SliceModule slice(const Presentation& g, int p) {
  const ContextPtr& ctx = g.context();
  SliceModule s;
  s.rctx = base_ring_of(ctx);
  s.labels = slice_basis(*ctx, g.f0(), p);

  auto weights = infer_base_weights(g);
  s.graded = weights.has_value();
  for (const auto& label : s.labels)
    s.gen_twists.push_back(weights ? weights->f0[label.comp] : 0);

  std::map<std::pair<int, std::vector<int>>, int> index;
  for (size_t r = 0; r < s.labels.size(); ++r)
    index.emplace(std::make_pair(s.labels[r].comp, s.labels[r].mono.exps()), static_cast<int>(r));

  const int m = ctx->base_vars();
  const int t = ctx->total_vars();
  for (int j = 0; j < g.f1().rank(); ++j) {
    for (auto& nu : fiber_monomials_of_degree(*ctx, p - g.f1().twists[j])) {
      FreeElement col(s.rctx);
      for (int i = 0; i < g.f0().rank(); ++i) {
        const Polynomial& entry = g.phi().at(i, j);
        for (const auto& [mono, c] : entry.terms()) {
          std::vector<int> target(t, 0);
          for (int v = m; v < t; ++v) target[v] = mono[v] + nu[v];
          auto it = index.find(std::make_pair(i, target));
          if (it == index.end()) throw InternalError("slice: target monomial missing from basis");
          std::vector<int> base_part(mono.exps().begin(), mono.exps().begin() + m);
          col.add_term(it->second, Monomial(std::move(base_part)), c);
        }
      }
      if (col.is_zero()) continue;
      s.relations.push_back(std::move(col));
      s.relation_twists.push_back(weights ? weights->f1[j] : 0);
    }
  }
  return s;
}

std::vector<QVec> rational_columns(const SliceModule& s) {
  if (s.rctx->total_vars() != 0)
    throw InternalError("rational_columns requires a field base ring");
  std::vector<QVec> cols;
  cols.reserve(s.relations.size());
  for (const auto& rel : s.relations) {
    QVec v;
    for (const auto& [r, poly] : rel.components()) v.emplace(r, poly.constant_coefficient());
    cols.push_back(std::move(v));
  }
  return cols;
}

int qdim(const SliceModule& s) {
  return s.ambient_rank() - qrank(rational_columns(s));
}

namespace {
Presentation as_presentation(const SliceModule& s) {
  GradedFreeModule f0(s.gen_twists);
  GradedFreeModule f1(s.relation_twists);
  PolyMatrix phi = PolyMatrix::from_columns(s.rctx, f0.rank(), s.relations);
  return Presentation(s.rctx, std::move(f0), std::move(f1), std::move(phi));
}
}  // namespace

int hilbert_dim(const SliceModule& s, int t) {
  if (!s.graded) throw InputError("slice module is not graded over the base ring");
  SliceModule deeper = slice(as_presentation(s), t);
  return qdim(deeper);
}

std::vector<int> hilbert_function(const SliceModule& s, int lo, int hi) {
  std::vector<int> h;
  for (int t = lo; t <= hi; ++t) h.push_back(hilbert_dim(s, t));
  return h;
}

std::string RInvariants::str() const {
  if (free_rank == 0 && torsion.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "R^" << free_rank;
    first = false;
  }
  for (int e : torsion) {
    if (!first) os << "+";
    os << "R/x^" << e;
    first = false;
  }
  return os.str();
}

RInvariants invariants(const SliceModule& s) {
  const int vars = s.rctx->total_vars();
  if (vars == 0) return RInvariants{qdim(s), {}};
  if (vars != 1)
    throw InternalError("invariants: base ring with more than one variable");
  if (!s.graded) throw InputError("invariants require a graded slice module");

  // Graded Smith normal form. Homogeneous univariate entries are monomials
  // c*x^e; the global minimum-degree entry divides everything in its row and
  // column, so elementary operations keep all entries monomial.
  struct Cell {
    Rational c;
    int e = 0;
    bool zero = true;
  };
  const int rows = s.ambient_rank();
  const int cols = static_cast<int>(s.relations.size());
  std::vector<std::vector<Cell>> a(rows, std::vector<Cell>(cols));
  for (int j = 0; j < cols; ++j)
    for (const auto& [r, poly] : s.relations[j].components()) {
      if (poly.term_count() != 1) throw InternalError("invariants: entry not a monomial");
      const auto& [mono, coef] = *poly.terms().begin();
      a[r][j] = Cell{coef, mono.total_degree(), false};
    }

  std::vector<bool> row_done(rows, false), col_done(cols, false);
  RInvariants inv;
  for (;;) {
    int pr = -1, pc = -1;
    for (int r = 0; r < rows; ++r) {
      if (row_done[r]) continue;
      for (int c = 0; c < cols; ++c) {
        if (col_done[c] || a[r][c].zero) continue;
        if (pr < 0 || a[r][c].e < a[pr][pc].e) {
          pr = r;
          pc = c;
        }
      }
    }
    if (pr < 0) break;
    Cell pivot = a[pr][pc];
    // clear the pivot row (column operations)
    for (int c = 0; c < cols; ++c) {
      if (c == pc || col_done[c] || a[pr][c].zero) continue;
      Rational f = a[pr][c].c / pivot.c;
      int de = a[pr][c].e - pivot.e;
      for (int r = 0; r < rows; ++r) {
        if (a[r][pc].zero) continue;
        Cell sub{f * a[r][pc].c, a[r][pc].e + de, false};
        if (a[r][c].zero) {
          a[r][c] = Cell{-sub.c, sub.e, false};
        } else {
          if (a[r][c].e != sub.e) throw InternalError("invariants: degree clash");
          a[r][c].c -= sub.c;
          if (is_zero(a[r][c].c)) a[r][c].zero = true;
        }
      }
    }
    // clear the pivot column (row operations); pivot row now only has pivot
    for (int r = 0; r < rows; ++r) {
      if (r == pr || row_done[r]) continue;
      a[r][pc].zero = true;
    }
    row_done[pr] = true;
    col_done[pc] = true;
    if (pivot.e > 0) inv.torsion.push_back(pivot.e);
  }
  int pivots = 0;
  for (bool b : row_done) pivots += b ? 1 : 0;
  inv.free_rank = rows - pivots;
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

HilbertData hilbert_data(const Presentation& g, int lo, int hi, int x_lo, int x_hi) {
  HilbertData data;
  for (int p = lo; p <= hi; ++p) {
    HilbertRecord rec;
    rec.degree = p;
    SliceModule s = slice(g, p);
    if (g.context()->base_vars() == 0) {
      rec.dim = qdim(s);
    } else {
      rec.x_hilbert = hilbert_function(s, x_lo, x_hi);
      rec.slice = std::move(s);
    }
    data.records.push_back(std::move(rec));
  }
  return data;
}

// --- text formats -----------------------------------------------------------

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

std::string parse_integer_token(Cursor& cur) {
  cur.skip_ws();
  size_t start = cur.i;
  while (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) ++cur.i;
  if (cur.i == start) throw InputError("expected a number at position " + std::to_string(start));
  return cur.s.substr(start, cur.i - start);
}

bool try_prefix(Cursor& cur, const std::string& prefix) {
  cur.skip_ws();
  if (prefix.empty()) return false;
  if (cur.s.compare(cur.i, prefix.size(), prefix) != 0) return false;
  size_t after = cur.i + prefix.size();
  if (after >= cur.s.size() || !std::isdigit(static_cast<unsigned char>(cur.s[after])))
    return false;
  cur.i = after;
  return true;
}

}  // namespace

Polynomial parse_polynomial(const ContextPtr& ctx, const std::string& text) {
  Polynomial result(ctx);
  Cursor cur{text};
  bool first = true;
  while (!cur.eof()) {
    int sign = 1;
    char c = cur.peek();
    if (c == '+' || c == '-') {
      sign = (c == '-') ? -1 : 1;
      ++cur.i;
    } else if (!first) {
      throw InputError("expected '+' or '-' between terms near position " +
                       std::to_string(cur.i));
    }
    first = false;
    cur.skip_ws();

    Rational coef(sign);
    Monomial mono = unit_monomial(*ctx);
    bool have_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      cur.skip_ws();
      if (cur.i < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.i]))) {
        std::string num = parse_integer_token(cur);
        cur.skip_ws();
        if (cur.i < cur.s.size() && cur.s[cur.i] == '/') {
          ++cur.i;
          std::string den = parse_integer_token(cur);
          coef *= rat(num + "/" + den);
        } else {
          coef *= rat(num);
        }
        have_factor = true;
      } else {
        int var = -1;
        bool longer_base = ctx->base_prefix().size() >= ctx->fiber_prefix().size();
        const std::string& first_try = longer_base ? ctx->base_prefix() : ctx->fiber_prefix();
        const std::string& second_try = longer_base ? ctx->fiber_prefix() : ctx->base_prefix();
        for (int attempt = 0; attempt < 2 && var < 0; ++attempt) {
          const std::string& prefix = attempt == 0 ? first_try : second_try;
          bool is_base = (&prefix == &ctx->base_prefix());
          size_t save = cur.i;
          if (try_prefix(cur, prefix)) {
            int idx = std::stoi(parse_integer_token(cur));
            int count = is_base ? ctx->base_vars() : ctx->fiber_vars();
            if (idx < 1 || idx > count)
              throw InputError("variable " + prefix + std::to_string(idx) +
                               " out of range (context has " + std::to_string(count) + ")");
            var = is_base ? idx - 1 : ctx->base_vars() + idx - 1;
          } else {
            cur.i = save;
          }
        }
        if (var < 0)
          throw InputError("cannot parse factor near position " + std::to_string(cur.i) +
                           " in \"" + text + "\"");
        int exp = 1;
        cur.skip_ws();
        if (cur.i < cur.s.size() && cur.s[cur.i] == '^') {
          ++cur.i;
          exp = std::stoi(parse_integer_token(cur));
          if (exp < 0) throw InputError("negative exponent");
        }
        mono[var] += exp;
        have_factor = true;
      }
      cur.skip_ws();
      if (cur.i < cur.s.size() && cur.s[cur.i] == '*') {
        ++cur.i;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (!have_factor) throw InputError("empty term in \"" + text + "\"");
    result.add_term(mono, coef);
  }
  return result;
}

namespace {
std::vector<int> parse_twist_list(const std::string& rest, int line_no) {
  std::vector<int> twists;
  std::istringstream is(rest);
  std::string tok;
  while (is >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      twists.push_back(v);
    } catch (const std::exception&) {
      throw InputError("line " + std::to_string(line_no) + ": bad twist '" + tok + "'");
    }
  }
  return twists;
}
}  // namespace

Presentation parse_module(std::istream& in) {
  std::string line;
  int line_no = 0;
  ContextPtr ctx;
  std::optional<std::vector<int>> f0_twists, f1_twists;
  std::vector<std::vector<Polynomial>> rel_rows;
  std::vector<int> rel_lines;

  auto strip = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("vars", 0) == 0) {
      std::istringstream is(t.substr(4));
      int m, n;
      if (!(is >> m >> n))
        throw InputError("line " + std::to_string(line_no) + ": expected 'vars <m> <n>'");
      ctx = make_context(m, n);
    } else if (t.rfind("twists F0:", 0) == 0) {
      f0_twists = parse_twist_list(t.substr(10), line_no);
    } else if (t.rfind("twists F1:", 0) == 0) {
      f1_twists = parse_twist_list(t.substr(10), line_no);
    } else if (t.rfind("rel:", 0) == 0) {
      if (!ctx || !f0_twists)
        throw InputError("line " + std::to_string(line_no) +
                         ": 'rel:' before 'vars'/'twists F0:'");
      std::string body = t.substr(4);
      std::vector<std::string> pieces;
      std::string acc;
      for (char ch : body) {
        if (ch == ';') {
          pieces.push_back(acc);
          acc.clear();
        } else {
          acc += ch;
        }
      }
      if (!strip(acc).empty() || !pieces.empty()) pieces.push_back(acc);
      if (static_cast<int>(pieces.size()) != static_cast<int>(f0_twists->size()))
        throw InputError("line " + std::to_string(line_no) + ": expected " +
                         std::to_string(f0_twists->size()) + " entries, got " +
                         std::to_string(pieces.size()));
      std::vector<Polynomial> row;
      for (auto& piece : pieces) {
        std::string p = strip(piece);
        try {
          row.push_back(p.empty() ? Polynomial(ctx) : parse_polynomial(ctx, p));
        } catch (const InputError& e) {
          throw InputError("line " + std::to_string(line_no) + ": " + e.what());
        }
      }
      rel_rows.push_back(std::move(row));
      rel_lines.push_back(line_no);
    } else {
      throw InputError("line " + std::to_string(line_no) + ": unrecognized directive");
    }
  }
  if (!ctx) throw InputError("missing 'vars' header");
  if (!f0_twists) throw InputError("missing 'twists F0:' header");
  if (!f1_twists) f1_twists = std::vector<int>{};
  if (rel_rows.size() != f1_twists->size())
    throw InputError("have " + std::to_string(rel_rows.size()) + " rel: lines but " +
                     std::to_string(f1_twists->size()) + " F1 twists");

  GradedFreeModule f0(*f0_twists), f1(*f1_twists);
  PolyMatrix phi(ctx, f0.rank(), f1.rank());
  for (int j = 0; j < f1.rank(); ++j)
    for (int i = 0; i < f0.rank(); ++i) phi.at(i, j) = rel_rows[j][i];
  Presentation pres(ctx, std::move(f0), std::move(f1), std::move(phi));
  try {
    pres.validate();
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()) + " (module definition input)");
  }
  return pres;
}

Presentation parse_module_text(const std::string& text) {
  std::istringstream is(text);
  return parse_module(is);
}

std::string serialize_module(const Presentation& g) {
  std::ostringstream os;
  os << "vars " << g.context()->base_vars() << " " << g.context()->fiber_vars() << "\n";
  os << "twists F0:";
  for (int t : g.f0().twists) os << " " << t;
  os << "\n";
  os << "twists F1:";
  for (int t : g.f1().twists) os << " " << t;
  os << "\n";
  for (int j = 0; j < g.f1().rank(); ++j) {
    os << "rel:";
    for (int i = 0; i < g.f0().rank(); ++i) {
      if (i) os << " ;";
      os << " " << g.phi().at(i, j).str();
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace gdl
