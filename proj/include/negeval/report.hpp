#ifndef NEGEVAL_REPORT_HPP
#define NEGEVAL_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "negeval/matching.hpp"
#include "negeval/metrics.hpp"
#include "negeval/model.hpp"

namespace negeval {

inline constexpr int kReportSchemaVersion = 1;

struct ReportOptions {
  bool strip_punct = true;
  /// Which cue metric is shown in the summary table's Cues column.
  CueMatchMode cue_match = CueMatchMode::Exact;
  CnsDenominator cns_denominator = CnsDenominator::NegationSentences;
};

struct MetricReport {
  int schema_version = kReportSchemaVersion;
  std::string gold_name;
  std::string pred_name;
  CueMatchMode cue_match = CueMatchMode::Exact;
  bool punct_stripped = true;
  CnsDenominator cns_denominator = CnsDenominator::NegationSentences;

  PRF cues_exact;
  PRF cues_exact_b;
  PRF cues_partial;
  PRF cues_partial_b;
  PRF scm;
  PRF scm_b;
  PRF nis_ex;
  PRF st;
  PRF nis_tok;
  Ratio cns;

  /// Metric keys in output order: cues, cues_b, cues_partial, cues_partial_b,
  /// scm, scm_b, nis_ex, st, nis_tok (cns is separate).
  static const std::vector<std::string>& prf_keys();
  const PRF& prf(const std::string& key) const;
  PRF& prf(const std::string& key);

  friend bool operator==(const MetricReport&, const MetricReport&) = default;
};

/// Strips punctuation (unless disabled), aligns and computes every metric.
MetricReport full_report(const Corpus& gold, const Corpus& pred, const ReportOptions& options = {});

/// Metric keys accepted by the output filters ("cns" included).
bool is_metric_key(const std::string& key);

nlohmann::json to_json(const MetricReport& report);
MetricReport report_from_json(const nlohmann::json& j);

/// One row per metric. An empty `metrics` selects all of them.
std::string to_tsv(const MetricReport& report, const std::vector<std::string>& metrics = {},
                   int decimals = 1);

/// Summary table in the column order Cues-B | SCM | SCM-B (NIS_ex) | ST P R F1 |
/// NIS_tok P R F1, followed by every metric with its counts.
std::string to_text(const MetricReport& report, const std::vector<std::string>& metrics = {},
                    int decimals = 1);

/// B minus A for precision, recall and F1 of every metric.
struct MetricDelta {
  std::string key;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
};
std::vector<MetricDelta> compare_reports(const MetricReport& a, const MetricReport& b);

nlohmann::json comparison_to_json(const MetricReport& a, const MetricReport& b);
std::string comparison_to_tsv(const MetricReport& a, const MetricReport& b,
                              const std::vector<std::string>& metrics = {}, int decimals = 1);
std::string comparison_to_text(const MetricReport& a, const MetricReport& b,
                               const std::vector<std::string>& metrics = {}, int decimals = 1);

}  // namespace negeval

#endif  // NEGEVAL_REPORT_HPP
