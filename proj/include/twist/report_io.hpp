#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "twist/avoidance.hpp"
#include "twist/complexity.hpp"
#include "twist/descent.hpp"
#include "twist/word.hpp"

namespace twist {

inline constexpr const char* kToolVersion = "0.1.0";

// Envelope shared by every emitted report: tool version, optional UTC
// timestamp (omitted under --no-timestamp so reruns are byte-identical), and
// the ordered key=value parameters that produced the run.
struct ReportMeta {
  std::string tool_version = kToolVersion;
  std::optional<std::string> generated_at;
  std::vector<std::pair<std::string, std::string>> params;

  void add_param(std::string key, std::string value);
  std::optional<std::string> param(const std::string& key) const;
};

std::string utc_timestamp_now();

// TSV: '#'-prefixed meta lines, a column header, one occurrence per data row
// (start, m, k, j, N), '#'-prefixed summary lines. An empty report keeps the
// header and states "free within range". Complexity uses columns
// k, p(k), stable with the fit appended as comments.
std::string to_tsv(const FreenessReport& report, const ReportMeta& meta);
std::string to_tsv(const CampaignReport& report, const ReportMeta& meta);
std::string to_tsv(const ComplexityProfile& profile,
                   const std::optional<LinearFit>& fit, double entropy,
                   const ReportMeta& meta);
std::string to_tsv(const DescentReport& report, const ReportMeta& meta);
std::string to_tsv(const StructureAuditReport& report, const ReportMeta& meta);

// JSON: {tool_version, params, generated_at?, body}; key order fixed.
nlohmann::ordered_json to_json(const FreenessReport& report,
                               const ReportMeta& meta);
nlohmann::ordered_json to_json(const CampaignReport& report,
                               const ReportMeta& meta);
nlohmann::ordered_json to_json(const ComplexityProfile& profile,
                               const std::optional<LinearFit>& fit,
                               double entropy, const ReportMeta& meta);
nlohmann::ordered_json to_json(const DescentReport& report,
                               const ReportMeta& meta);
nlohmann::ordered_json to_json(const StructureAuditReport& report,
                               const ReportMeta& meta);

// Writes to the path, or to stdout when path is empty or "-".
void emit(const std::string& bytes, const std::string& path);

// One occurrence as serialized: block start and length, block count, twist
// exponent, alphabet size.
struct OccurrenceRow {
  std::size_t start = 0;
  std::size_t m = 0;
  int k = 0;
  int j = 0;
  int alphabet_size = 0;
};

// A report read back for rechecking: the meta params plus every occurrence
// row found (freeness rows, campaign cell rows, a descent row).
struct ParsedReport {
  ReportMeta meta;
  std::vector<OccurrenceRow> rows;
};

ParsedReport parse_report(const std::string& bytes);
ParsedReport parse_report_file(const std::string& path);

struct RecheckResult {
  std::size_t rows_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Rebuilds the host word each row came from (canonical cycle on the row's
// alphabet unless the params carry an explicit sigma) and confirms the row
// still verifies as a strong repetition. word_override supplies the host
// when the original scan read it from a file.
RecheckResult recheck_report(const ParsedReport& report,
                             const std::optional<Word>& word_override = {});

}  // namespace twist
