#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iostream>
#include <thread>

#include "gdl/report.hpp"

using namespace gdl;

namespace {

struct WindowFlag {
  int lo = 0, hi = 0;
  bool set = false;
};

void parse_window(const std::string& text, WindowFlag& w) {
  auto pos = text.find("..");
  if (pos == std::string::npos) throw InputError("window must be LO..HI");
  try {
    w.lo = std::stoi(text.substr(0, pos));
    w.hi = std::stoi(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw InputError("window must be LO..HI with integer bounds");
  }
  if (w.lo > w.hi) throw InputError("window bounds must be ordered");
  w.set = true;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string acc;
  for (char c : text + ",") {
    if (c == ',') {
      if (!acc.empty()) out.push_back(std::stoi(acc));
      acc.clear();
    } else {
      acc += c;
    }
  }
  return out;
}

struct InputSpec {
  std::string name;
  int n = 2;
  std::vector<int> twists{0};
  std::vector<int> ideal;
  int w = 1;
};

Presentation load_input(const InputSpec& in) {
  if (in.name == "free") return builtin_free(in.n, in.twists);
  if (in.name == "a-mod-i") return builtin_a_mod_i(in.n);
  if (in.name == "koszul-quot") {
    if (in.ideal.empty()) throw InputError("koszul-quot needs --ideal i,j,...");
    return builtin_koszul_quotient(in.n, in.ideal);
  }
  if (in.name == "ex41") return build_example_4_1(in.w);
  std::ifstream f(in.name);
  if (!f) throw InputError("cannot open input '" + in.name + "'");
  return parse_module(f);
}

std::pair<int, int> default_window(const Presentation& g) {
  int n = g.context()->fiber_vars();
  int tmin = 0, tmax = 0;
  for (int t : g.f0().twists) {
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  for (int t : g.f1().twists) {
    tmin = std::min(tmin, t);
    tmax = std::max(tmax, t);
  }
  return {-(n + (tmax - tmin) + 4), n + 4};
}

int thread_cap() {
  const char* env = std::getenv("GDL_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  int threads = std::min(thread_cap(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&]() {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded local cohomology and duality engine"};
  app.require_subcommand(1);

  InputSpec in;
  WindowFlag window;
  int kcap = -1;
  std::string format = "text";
  std::string route = "all";
  std::string seed_str = "none";
  uint64_t seed = 1;
  int count = 50;
  bool minimize = false;
  int ex_n = 5, ex_p = 0, ex_w = 2;
  std::string twists_str, ideal_str, window_str;

  auto add_common = [&](CLI::App* cmd, bool with_input) {
    if (with_input) cmd->add_option("input", in.name, "module file or builtin id")->required();
    cmd->add_option("--n", in.n, "fiber variable count for builtins");
    cmd->add_option("--twists", twists_str, "builtin free twists, comma separated");
    cmd->add_option("--ideal", ideal_str, "koszul-quot variable indices, comma separated");
    cmd->add_option("--w", in.w, "ex41 weight parameter");
    cmd->add_option("--window", window_str, "degree window LO..HI");
    cmd->add_option("--kcap", kcap, "truncation cap for the limit routes");
    cmd->add_option("--format", format, "text | json | csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--seed", seed_str, "seed for randomized suites");
    cmd->add_option("--count", count, "suite size");
    cmd->add_flag("--minimize", minimize, "minimize resolutions");
  };

  auto* cmd_resolve = app.add_subcommand("resolve", "free resolution summary");
  add_common(cmd_resolve, true);
  auto* cmd_localcoh = app.add_subcommand("localcoh", "local cohomology tables");
  add_common(cmd_localcoh, true);
  cmd_localcoh->add_option("--route", route, "res | koszul | cech | all")
      ->check(CLI::IsMember({"res", "koszul", "cech", "all"}));
  auto* cmd_duality = app.add_subcommand("duality", "graded duality check");
  add_common(cmd_duality, true);
  auto* cmd_les = app.add_subcommand("les", "long exact sequence check");
  add_common(cmd_les, true);
  auto* cmd_repro = app.add_subcommand("reproduce", "reproduce a worked example");
  std::string which;
  cmd_repro->add_option("example", which, "ex36 | ex41 | ex43")->required();
  cmd_repro->add_option("--n", ex_n, "ex43 variable count");
  cmd_repro->add_option("--p", ex_p, "ex43 graded piece");
  cmd_repro->add_option("--w", ex_w, "ex41 weight");
  cmd_repro->add_option("--window", window_str, "degree window LO..HI");
  cmd_repro->add_option("--kcap", kcap, "truncation cap");
  cmd_repro->add_option("--format", format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd_repro->add_option("--seed", seed_str, "seed (echoed into the report)");

  try {
    app.parse(argc, argv);
    if (!twists_str.empty()) in.twists = parse_int_list(twists_str);
    if (!ideal_str.empty()) in.ideal = parse_int_list(ideal_str);
    if (!window_str.empty()) parse_window(window_str, window);
    if (seed_str != "none") seed = std::stoull(seed_str);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  try {
    RunMeta meta;
    meta.seed = seed_str;
    meta.format = format;

    if (cmd_resolve->parsed()) {
      Presentation g = load_input(in);
      ResolutionCert cert = free_resolution(g, minimize);
      ResolveSummary sum = resolve_summary(cert);
      auto [dlo, dhi] = window.set ? std::pair{window.lo, window.hi} : default_window(g);
      sum.verified = verify_resolution(cert, g, dlo, dhi);
      meta.check = "resolve";
      meta.params = {{"input", in.name},
                     {"minimize", minimize ? "true" : "false"},
                     {"window", std::to_string(dlo) + ".." + std::to_string(dhi)}};
      std::cout << (format == "json" ? render_resolve_json(sum, meta)
                                     : render_resolve_text(sum, meta));
      if (!sum.verified) throw InternalError("resolution failed its slice-exactness certificate");
      return 0;
    }

    if (cmd_localcoh->parsed()) {
      Presentation g = load_input(in);
      auto [dlo, dhi] = window.set ? std::pair{window.lo, window.hi} : default_window(g);
      int cap = kcap > 0 ? kcap : default_k_cap(g, dlo, dhi);
      LocalCohomologyTable table = local_cohomology_table(g, route, dlo, dhi, cap);
      meta.check = "localcoh";
      meta.params = {{"input", in.name},
                     {"route", route},
                     {"window", std::to_string(dlo) + ".." + std::to_string(dhi)},
                     {"kcap", std::to_string(cap)}};
      if (format == "json")
        std::cout << render_localcoh_json(table, meta);
      else if (format == "csv")
        std::cout << render_localcoh_csv(table, meta);
      else
        std::cout << render_localcoh_text(table, meta);
      return table.routes_agree ? 0 : 1;
    }

    if (cmd_duality->parsed()) {
      if (in.name == "suite") {
        auto suite = random_monomial_suite(seed, count);
        std::vector<int> fails(suite.size(), 0);
        parallel_for(static_cast<int>(suite.size()), [&](int i) {
          auto [dlo, dhi] = default_window(suite[i]);
          DualityReport rep = theorem3_check(suite[i], dlo, dhi);
          fails[i] = rep.pass ? 0 : 1;
        });
        int failed = 0;
        for (int f : fails) failed += f;
        std::cout << "gdl report schema 1\ncheck: duality-suite\nparams: count=" << count
                  << "\nseed: " << seed_str << "\nfailed: " << failed << "/" << count
                  << "\nverdict: " << (failed == 0 ? "PASS" : "FAIL") << "\n";
        return failed == 0 ? 0 : 1;
      }
      Presentation g = load_input(in);
      auto [dlo, dhi] = window.set ? std::pair{window.lo, window.hi} : default_window(g);
      DualityReport rep = theorem3_check(g, dlo, dhi);
      meta.check = "duality";
      meta.params = {{"input", in.name},
                     {"window", std::to_string(dlo) + ".." + std::to_string(dhi)}};
      std::cout << (format == "json" ? render_duality_json(rep, meta)
                                     : render_duality_text(rep, meta));
      std::cerr << "elapsed_ms: " << rep.elapsed_ms << "\n";
      return rep.pass ? 0 : 1;
    }

    if (cmd_les->parsed()) {
      Presentation g = load_input(in);
      auto [dlo, dhi] = window.set ? std::pair{window.lo, window.hi} : default_window(g);
      int cap = kcap > 0 ? kcap : default_k_cap(g, dlo, dhi);
      LesReport rep = les_check(g, dlo, dhi, cap);
      meta.check = "les";
      meta.params = {{"input", in.name},
                     {"window", std::to_string(dlo) + ".." + std::to_string(dhi)},
                     {"kcap", std::to_string(cap)}};
      std::cout << (format == "json" ? render_les_json(rep, meta) : render_les_text(rep, meta));
      return rep.exact ? 0 : 1;
    }

    if (cmd_repro->parsed()) {
      if (which == "ex36") {
        int lo = window.set ? window.lo : -6, hi = window.set ? window.hi : 6;
        int cap = kcap > 0 ? kcap : 2 * (hi - lo) + 6;
        Ex36Verdict v = check_example_3_6(lo, hi, cap);
        meta.check = "reproduce-ex36";
        meta.params = {{"window", std::to_string(lo) + ".." + std::to_string(hi)},
                       {"kcap", std::to_string(cap)}};
        std::cout << (format == "json" ? render_ex36_json(v, meta) : render_ex36_text(v, meta));
        return v.pass ? 0 : 1;
      }
      if (which == "ex41") {
        int lo = window.set ? window.lo : -ex_w - 3, hi = window.set ? window.hi : ex_w + 3;
        int cap = kcap > 0 ? kcap : 2 * (std::abs(lo) + std::abs(hi)) + ex_w + 8;
        Ex41Report rep = run_example_4_1(ex_w, lo, hi, cap);
        meta.check = "reproduce-ex41";
        meta.params = {{"w", std::to_string(ex_w)},
                       {"window", std::to_string(lo) + ".." + std::to_string(hi)},
                       {"kcap", std::to_string(cap)}};
        std::cout << (format == "json" ? render_ex41_json(rep, meta) : render_ex41_text(rep, meta));
        return rep.pass ? 0 : 1;
      }
      if (which == "ex43") {
        Ex43Verdict v = check_example_4_3(ex_n, ex_p);
        meta.check = "reproduce-ex43";
        meta.params = {{"n", std::to_string(ex_n)},
                       {"p", std::to_string(ex_p)},
                       {"x-window", "0..8"}};
        std::cout << (format == "json" ? render_ex43_json(v, meta) : render_ex43_text(v, meta));
        return v.pass ? 0 : 1;
      }
      throw InputError("unknown example '" + which + "' (use ex36 | ex41 | ex43)");
    }
  } catch (const StabilizationCapError& e) {
    std::cerr << "stabilization cap exceeded: " << e.what() << "\n"
              << "last two values: " << e.last_two_values << "\n";
    return 3;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "internal invariant breach: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
