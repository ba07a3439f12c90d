#include "gdl/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace gdl {

using nlohmann::json;

std::string RunMeta::params_line() const {
  std::ostringstream os;
  for (size_t i = 0; i < params.size(); ++i) {
    if (i) os << ", ";
    os << params[i].first << "=" << params[i].second;
  }
  return os.str();
}

namespace {

std::string header(const RunMeta& meta) {
  std::ostringstream os;
  os << "gdl report schema 1\n";
  os << "check: " << meta.check << "\n";
  os << "params: " << meta.params_line() << "\n";
  os << "seed: " << meta.seed << "\n";
  return os.str();
}

json meta_json(const RunMeta& meta) {
  json j;
  j["schema"] = 1;
  j["check"] = meta.check;
  json params = json::object();
  for (const auto& [k, v] : meta.params) params[k] = v;
  j["params"] = params;
  j["seed"] = meta.seed;
  return j;
}

json entry_json(const TableEntry& e) {
  json j;
  j["route"] = e.route;
  j["i"] = e.i;
  j["p"] = e.p;
  j["value"] = e.value.str();
  if (e.stabilized_k >= 0) j["stabilized_k"] = e.stabilized_k;
  return j;
}

}  // namespace

std::string render_localcoh_text(const LocalCohomologyTable& table, const RunMeta& meta) {
  std::ostringstream os;
  os << header(meta);
  os << "columns: route i p value stabilized_k\n";
  for (const auto& e : table.entries) {
    os << e.route << " " << e.i << " " << e.p << " " << e.value.str() << " ";
    if (e.stabilized_k >= 0)
      os << e.stabilized_k;
    else
      os << "-";
    os << "\n";
  }
  os << "routes_agree: " << (table.routes_agree ? "yes" : "no") << "\n";
  if (!table.routes_agree) os << "disagreement: " << table.disagreement << "\n";
  os << "verdict: " << (table.routes_agree ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_localcoh_json(const LocalCohomologyTable& table, const RunMeta& meta) {
  json j = meta_json(meta);
  j["entries"] = json::array();
  for (const auto& e : table.entries) j["entries"].push_back(entry_json(e));
  j["routes_agree"] = table.routes_agree;
  j["verdict"] = table.routes_agree ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

std::string render_localcoh_csv(const LocalCohomologyTable& table, const RunMeta& meta) {
  std::ostringstream os;
  os << "route,i,p,value,stabilized_k\n";
  for (const auto& e : table.entries) {
    os << e.route << "," << e.i << "," << e.p << "," << e.value.str() << ",";
    if (e.stabilized_k >= 0) os << e.stabilized_k;
    os << "\n";
  }
  (void)meta;
  return os.str();
}

std::string render_les_text(const LesReport& rep, const RunMeta& meta) {
  std::ostringstream os;
  os << header(meta);
  os << "columns: p gamma module direct_image h1 higher... exact flags(a0,bB,b0,gB) k\n";
  for (const auto& node : rep.nodes) {
    os << node.p << " " << node.gamma.str() << " " << node.module.str() << " "
       << node.direct_image.str() << " " << node.h1.str();
    for (const auto& h : node.higher) os << " " << h.str();
    os << " " << (node.exact ? "exact" : ("FAIL:" + node.failure));
    os << " " << (node.alpha_zero ? 1 : 0) << (node.beta_bijective ? 1 : 0)
       << (node.beta_zero ? 1 : 0) << (node.gamma_bijective ? 1 : 0);
    os << " " << node.stabilized_k << "\n";
  }
  os << "exact: " << (rep.exact ? "yes" : "no") << "\n";
  os << "top_regime: " << (rep.top_regime ? "yes" : "no") << "\n";
  os << "bottom_regime: " << (rep.bottom_regime ? "yes" : "no") << "\n";
  os << "verdict: " << (rep.exact ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_les_json(const LesReport& rep, const RunMeta& meta) {
  json j = meta_json(meta);
  j["entries"] = json::array();
  for (const auto& node : rep.nodes) {
    json e;
    e["p"] = node.p;
    e["gamma"] = node.gamma.str();
    e["module"] = node.module.str();
    e["direct_image"] = node.direct_image.str();
    e["h1"] = node.h1.str();
    json higher = json::array();
    for (const auto& h : node.higher) higher.push_back(h.str());
    e["higher"] = higher;
    e["exact"] = node.exact;
    e["stabilized_k"] = node.stabilized_k;
    e["alpha_zero"] = node.alpha_zero;
    e["beta_bijective"] = node.beta_bijective;
    e["beta_zero"] = node.beta_zero;
    e["gamma_bijective"] = node.gamma_bijective;
    j["entries"].push_back(std::move(e));
  }
  j["exact"] = rep.exact;
  j["top_regime"] = rep.top_regime;
  j["bottom_regime"] = rep.bottom_regime;
  j["verdict"] = rep.exact ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

std::string render_duality_text(const DualityReport& rep, const RunMeta& meta) {
  std::ostringstream os;
  os << header(meta);
  os << "provenance: " << rep.provenance << "\n";
  os << "columns: j p lhs rhs pass\n";
  for (const auto& c : rep.cells) {
    if (c.lhs.is_zero() && c.rhs.is_zero() && c.pass) continue;  // keep tables readable
    os << c.j << " " << c.p << " " << c.lhs.str() << " " << c.rhs.str() << " "
       << (c.pass ? "ok" : "MISMATCH") << "\n";
  }
  os << "cells: " << rep.cells.size() << "\n";
  os << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_duality_json(const DualityReport& rep, const RunMeta& meta) {
  json j = meta_json(meta);
  j["provenance"] = rep.provenance;
  j["entries"] = json::array();
  for (const auto& c : rep.cells) {
    json e;
    e["j"] = c.j;
    e["p"] = c.p;
    e["lhs"] = c.lhs.str();
    e["rhs"] = c.rhs.str();
    e["pass"] = c.pass;
    j["entries"].push_back(std::move(e));
  }
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

ResolveSummary resolve_summary(const ResolutionCert& cert) {
  ResolveSummary sum;
  for (int i = cert.cx.lo; i <= cert.cx.hi(); ++i) {
    std::vector<int> twists = cert.cx.comp(i)->twists;
    std::sort(twists.begin(), twists.end());
    sum.steps.emplace_back(i, std::move(twists));
  }
  return sum;
}

std::string render_resolve_text(const ResolveSummary& sum, const RunMeta& meta) {
  std::ostringstream os;
  os << header(meta);
  os << "columns: index rank twists\n";
  for (const auto& [i, twists] : sum.steps) {
    os << i << " " << twists.size() << " [";
    for (size_t t = 0; t < twists.size(); ++t) os << (t ? " " : "") << twists[t];
    os << "]\n";
  }
  os << "slice_exactness: " << (sum.verified ? "verified" : "unchecked") << "\n";
  return os.str();
}

std::string render_resolve_json(const ResolveSummary& sum, const RunMeta& meta) {
  json j = meta_json(meta);
  j["steps"] = json::array();
  for (const auto& [i, twists] : sum.steps) {
    json e;
    e["index"] = i;
    e["rank"] = twists.size();
    e["twists"] = twists;
    j["steps"].push_back(std::move(e));
  }
  j["slice_exactness"] = sum.verified;
  return j.dump(2) + "\n";
}

std::string render_ex36_text(const Ex36Verdict& v, const RunMeta& meta) {
  std::ostringstream os;
  os << header(meta);
  os << "columns: j p dim stabilized_k\n";
  for (const auto& e : v.entries)
    os << e.i << " " << e.p << " " << e.value.str() << " " << e.stabilized_k << "\n";
  os << "verdict: " << (v.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_ex36_json(const Ex36Verdict& v, const RunMeta& meta) {
  json j = meta_json(meta);
  j["entries"] = json::array();
  for (const auto& e : v.entries) j["entries"].push_back(entry_json(e));
  j["verdict"] = v.pass ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

std::string render_ex43_text(const Ex43Verdict& v, const RunMeta& meta) {
  std::ostringstream os;
  os << header(meta);
  os << "columns: j expected got pass\n";
  for (const auto& row : v.rows)
    os << row.j << " | " << row.expected << " | " << row.got << " | "
       << (row.pass ? "ok" : "MISMATCH") << "\n";
  os << "verdict: " << (v.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_ex43_json(const Ex43Verdict& v, const RunMeta& meta) {
  json j = meta_json(meta);
  j["n"] = v.n;
  j["p"] = v.p;
  j["entries"] = json::array();
  for (const auto& row : v.rows) {
    json e;
    e["j"] = row.j;
    e["expected"] = row.expected;
    e["got"] = row.got;
    e["pass"] = row.pass;
    j["entries"].push_back(std::move(e));
  }
  j["verdict"] = v.pass ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

Ex41Report run_example_4_1(int w, int p_lo, int p_hi, int k_cap) {
  Ex41Report rep;
  rep.w = w;
  rep.p_lo = p_lo;
  rep.p_hi = p_hi;
  Presentation g = build_example_4_1(w);  // throws if the self-check fails
  rep.builder_ok = true;
  const ContextPtr rctx = base_ring_of(g.context());

  for (int d = p_lo; d <= p_hi; ++d) rep.slices.emplace_back(d, invariants(slice(g, d)));

  for (int d = p_lo; d <= p_hi; ++d) {
    HomologyAt ker = gamma_torsion_slice(g, d, k_cap);
    if (node_is_zero(rctx, ker.pres)) {
      rep.gamma_kernels.emplace_back(d, "0");
    } else {
      RInvariants inv = invariants(node_as_slice(rctx, ker.pres));
      int min_twist = *std::min_element(ker.pres.gen_twists.begin(), ker.pres.gen_twists.end());
      rep.gamma_kernels.emplace_back(d, inv.str() + " gen x^" + std::to_string(min_twist));
    }
  }

  rep.les = les_check(g, p_lo, p_hi, k_cap);

  DualityReport t2 = theorem2_bookkeeping(g, 1, w + 1, p_lo, p_hi, k_cap);
  rep.theorem2_ok = t2.pass;
  rep.pass = rep.builder_ok && rep.les.exact && rep.theorem2_ok && rep.les.top_regime &&
             rep.les.bottom_regime;
  return rep;
}

std::string render_ex41_text(const Ex41Report& rep, const RunMeta& meta) {
  std::ostringstream os;
  os << header(meta);
  os << "builder_self_check: " << (rep.builder_ok ? "PASS" : "FAIL") << "\n";
  os << "slices (degree: structure):\n";
  for (const auto& [d, inv] : rep.slices) os << "  " << d << ": " << inv.str() << "\n";
  os << "gamma kernels (degree: structure):\n";
  for (const auto& [d, desc] : rep.gamma_kernels) os << "  " << d << ": " << desc << "\n";
  os << "les columns: p gamma module direct_image h1 exact flags(a0,bB,b0,gB) k\n";
  for (const auto& node : rep.les.nodes) {
    os << "  " << node.p << " " << node.gamma.str() << " " << node.module.str() << " "
       << node.direct_image.str() << " " << node.h1.str() << " "
       << (node.exact ? "exact" : ("FAIL:" + node.failure)) << " " << (node.alpha_zero ? 1 : 0)
       << (node.beta_bijective ? 1 : 0) << (node.beta_zero ? 1 : 0)
       << (node.gamma_bijective ? 1 : 0) << " " << node.stabilized_k << "\n";
  }
  os << "les exact: " << (rep.les.exact ? "yes" : "no") << "; top_regime: "
     << (rep.les.top_regime ? "yes" : "no")
     << "; bottom_regime: " << (rep.les.bottom_regime ? "yes" : "no") << "\n";
  os << "theorem2 (shift w+1): " << (rep.theorem2_ok ? "PASS" : "FAIL") << "\n";
  os << "verdict: " << (rep.pass ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string render_ex41_json(const Ex41Report& rep, const RunMeta& meta) {
  json j = meta_json(meta);
  j["w"] = rep.w;
  j["builder_self_check"] = rep.builder_ok;
  json slices = json::array();
  for (const auto& [d, inv] : rep.slices) {
    json e;
    e["degree"] = d;
    e["structure"] = inv.str();
    slices.push_back(std::move(e));
  }
  j["slices"] = slices;
  json kernels = json::array();
  for (const auto& [d, desc] : rep.gamma_kernels) {
    json e;
    e["degree"] = d;
    e["structure"] = desc;
    kernels.push_back(std::move(e));
  }
  j["gamma_kernels"] = kernels;
  j["les_exact"] = rep.les.exact;
  j["top_regime"] = rep.les.top_regime;
  j["bottom_regime"] = rep.les.bottom_regime;
  j["theorem2"] = rep.theorem2_ok;
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  return j.dump(2) + "\n";
}

}  // namespace gdl
