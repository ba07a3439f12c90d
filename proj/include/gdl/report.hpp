#ifndef GDL_REPORT_HPP
#define GDL_REPORT_HPP

#include <cstdint>
#include <map>
#include <string>

#include "gdl/examples.hpp"

namespace gdl {

/// Run parameters echoed into every report so identical configurations give
/// byte-identical output.
struct RunMeta {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;  // ordered
  std::string seed = "none";
  std::string format = "text";  // text | json | csv

  std::string params_line() const;
};

std::string render_localcoh_text(const LocalCohomologyTable& table, const RunMeta& meta);
std::string render_localcoh_json(const LocalCohomologyTable& table, const RunMeta& meta);
std::string render_localcoh_csv(const LocalCohomologyTable& table, const RunMeta& meta);

std::string render_les_text(const LesReport& rep, const RunMeta& meta);
std::string render_les_json(const LesReport& rep, const RunMeta& meta);

std::string render_duality_text(const DualityReport& rep, const RunMeta& meta);
std::string render_duality_json(const DualityReport& rep, const RunMeta& meta);

struct ResolveSummary {
  std::vector<std::pair<int, std::vector<int>>> steps;  // (index, sorted twists)
  bool verified = false;
};
ResolveSummary resolve_summary(const ResolutionCert& cert);
std::string render_resolve_text(const ResolveSummary& sum, const RunMeta& meta);
std::string render_resolve_json(const ResolveSummary& sum, const RunMeta& meta);

std::string render_ex36_text(const Ex36Verdict& v, const RunMeta& meta);
std::string render_ex43_text(const Ex43Verdict& v, const RunMeta& meta);

struct Ex41Report {
  int w = 0;
  int p_lo = 0, p_hi = 0;
  std::vector<std::pair<int, RInvariants>> slices;         // degree -> structure
  std::vector<std::pair<int, std::string>> gamma_kernels;  // degree -> description
  LesReport les;
  bool builder_ok = false;
  bool theorem2_ok = false;
  bool pass = false;
};
Ex41Report run_example_4_1(int w, int p_lo, int p_hi, int k_cap);
std::string render_ex41_text(const Ex41Report& rep, const RunMeta& meta);

/// JSON for the reproduce checks (schema 1).
std::string render_ex36_json(const Ex36Verdict& v, const RunMeta& meta);
std::string render_ex41_json(const Ex41Report& rep, const RunMeta& meta);
std::string render_ex43_json(const Ex43Verdict& v, const RunMeta& meta);

}  // namespace gdl

#endif
