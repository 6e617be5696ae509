#include "negeval/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "negeval/error.hpp"

namespace negeval {

const std::vector<std::string>& MetricReport::prf_keys() {
  static const std::vector<std::string> keys = {
      "cues", "cues_b", "cues_partial", "cues_partial_b", "scm", "scm_b", "nis_ex", "st", "nis_tok"};
  return keys;
}

PRF& MetricReport::prf(const std::string& key) {
  if (key == "cues") return cues_exact;
  if (key == "cues_b") return cues_exact_b;
  if (key == "cues_partial") return cues_partial;
  if (key == "cues_partial_b") return cues_partial_b;
  if (key == "scm") return scm;
  if (key == "scm_b") return scm_b;
  if (key == "nis_ex") return nis_ex;
  if (key == "st") return st;
  if (key == "nis_tok") return nis_tok;
  throw UsageError("unknown metric '" + key + "'");
}

const PRF& MetricReport::prf(const std::string& key) const {
  return const_cast<MetricReport*>(this)->prf(key);
}

bool is_metric_key(const std::string& key) {
  const auto& keys = MetricReport::prf_keys();
  return key == "cns" || std::find(keys.begin(), keys.end(), key) != keys.end();
}

MetricReport full_report(const Corpus& gold_in, const Corpus& pred_in, const ReportOptions& options) {
  const Corpus gold = options.strip_punct ? strip_punctuation(gold_in) : gold_in;
  const Corpus pred = options.strip_punct ? strip_punctuation(pred_in) : pred_in;

  MetricReport r;
  r.gold_name = gold_in.name;
  r.pred_name = pred_in.name;
  r.cue_match = options.cue_match;
  r.punct_stripped = options.strip_punct;
  r.cns_denominator = options.cns_denominator;

  const auto exact = align_corpus(gold, pred, CueMatchMode::Exact);
  const auto partial = align_corpus(gold, pred, CueMatchMode::Partial);
  r.cues_exact = cue_scores(exact, CueMatchMode::Exact, ScoreVariant::Standard);
  r.cues_exact_b = cue_scores(exact, CueMatchMode::Exact, ScoreVariant::B);
  r.cues_partial = cue_scores(partial, CueMatchMode::Partial, ScoreVariant::Standard);
  r.cues_partial_b = cue_scores(partial, CueMatchMode::Partial, ScoreVariant::B);
  r.scm = scm(exact, ScoreVariant::Standard);
  r.scm_b = scm(exact, ScoreVariant::B);
  r.nis_ex = nis(exact, ScopeScorer::exact());
  r.st = scope_tokens(exact);
  r.nis_tok = nis(exact, ScopeScorer::token());
  r.cns = cns(gold, pred, options.cns_denominator);
  return r;
}

namespace {

nlohmann::json prf_json(const PRF& m) {
  return {{"precision", m.precision},
          {"recall", m.recall},
          {"f1", m.f1},
          {"precision_numerator", m.precision_numerator},
          {"precision_denominator", m.precision_denominator},
          {"recall_numerator", m.recall_numerator},
          {"recall_denominator", m.recall_denominator},
          {"precision_percent", round_percent(m.precision)},
          {"recall_percent", round_percent(m.recall)},
          {"f1_percent", round_percent(m.f1)}};
}

PRF prf_from_json(const nlohmann::json& j) {
  PRF m;
  m.precision = j.at("precision").get<double>();
  m.recall = j.at("recall").get<double>();
  m.f1 = j.at("f1").get<double>();
  m.precision_numerator = j.at("precision_numerator").get<double>();
  m.precision_denominator = j.at("precision_denominator").get<double>();
  m.recall_numerator = j.at("recall_numerator").get<double>();
  m.recall_denominator = j.at("recall_denominator").get<double>();
  return m;
}

std::string cns_name(CnsDenominator d) {
  return d == CnsDenominator::NegationSentences ? "negation-sentences" : "all-sentences";
}

std::vector<std::string> selected(const std::vector<std::string>& metrics) {
  std::vector<std::string> keys = metrics;
  if (keys.empty()) {
    keys = MetricReport::prf_keys();
    keys.push_back("cns");
  }
  for (const auto& k : keys)
    if (!is_metric_key(k)) throw UsageError("unknown metric '" + k + "'");
  return keys;
}

std::string fixed(double v, int decimals) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(decimals) << v;
  return o.str();
}

std::string pct(double ratio, int decimals) { return fixed(round_percent(ratio, decimals), decimals); }

std::string raw(double v) {
  std::ostringstream o;
  o << std::setprecision(17) << v;
  return o.str();
}

std::string label(const std::string& key) {
  if (key == "cues") return "Cues";
  if (key == "cues_b") return "Cues-B";
  if (key == "cues_partial") return "Cues (partial)";
  if (key == "cues_partial_b") return "Cues-B (partial)";
  if (key == "scm") return "SCM";
  if (key == "scm_b") return "SCM-B";
  if (key == "nis_ex") return "NIS_ex";
  if (key == "st") return "ST";
  if (key == "nis_tok") return "NIS_tok";
  return "CNS";
}

std::string base_name(const std::string& path) {
  auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace

nlohmann::json to_json(const MetricReport& r) {
  nlohmann::json metrics;
  for (const auto& k : MetricReport::prf_keys()) metrics[k] = prf_json(r.prf(k));
  metrics["cns"] = {{"numerator", r.cns.numerator},
                    {"denominator", r.cns.denominator},
                    {"value", r.cns.value},
                    {"percent", round_percent(r.cns.value)}};
  return {{"schema_version", r.schema_version},
          {"gold", r.gold_name},
          {"pred", r.pred_name},
          {"cue_match", to_string(r.cue_match)},
          {"punctuation", r.punct_stripped ? "ignored" : "kept"},
          {"cns_denominator", cns_name(r.cns_denominator)},
          {"metrics", metrics}};
}

MetricReport report_from_json(const nlohmann::json& j) {
  MetricReport r;
  r.schema_version = j.at("schema_version").get<int>();
  if (r.schema_version > kReportSchemaVersion)
    throw UsageError("report schema version " + std::to_string(r.schema_version) +
                     " is newer than supported version " + std::to_string(kReportSchemaVersion));
  r.gold_name = j.at("gold").get<std::string>();
  r.pred_name = j.at("pred").get<std::string>();
  r.cue_match = cue_match_mode_from_string(j.at("cue_match").get<std::string>());
  r.punct_stripped = j.at("punctuation").get<std::string>() == "ignored";
  r.cns_denominator = j.at("cns_denominator").get<std::string>() == "all-sentences"
                          ? CnsDenominator::AllSentences
                          : CnsDenominator::NegationSentences;
  const auto& m = j.at("metrics");
  for (const auto& k : MetricReport::prf_keys()) r.prf(k) = prf_from_json(m.at(k));
  r.cns.numerator = m.at("cns").at("numerator").get<double>();
  r.cns.denominator = m.at("cns").at("denominator").get<double>();
  r.cns.value = m.at("cns").at("value").get<double>();
  return r;
}

std::string to_tsv(const MetricReport& r, const std::vector<std::string>& metrics, int decimals) {
  std::ostringstream o;
  o << "metric\tP\tR\tF1\tprecision\trecall\tf1\tprecision_numerator\tprecision_denominator"
       "\trecall_numerator\trecall_denominator\n";
  for (const auto& k : selected(metrics)) {
    if (k == "cns") {
      o << "cns\t-\t-\t" << pct(r.cns.value, decimals) << "\t-\t-\t" << raw(r.cns.value)
        << "\t-\t-\t" << raw(r.cns.numerator) << '\t' << raw(r.cns.denominator) << '\n';
      continue;
    }
    const auto& m = r.prf(k);
    o << k << '\t' << pct(m.precision, decimals) << '\t' << pct(m.recall, decimals) << '\t'
      << pct(m.f1, decimals) << '\t' << raw(m.precision) << '\t' << raw(m.recall) << '\t'
      << raw(m.f1) << '\t' << raw(m.precision_numerator) << '\t'
      << raw(m.precision_denominator) << '\t' << raw(m.recall_numerator) << '\t'
      << raw(m.recall_denominator) << '\n';
  }
  return o.str();
}

std::string to_text(const MetricReport& r, const std::vector<std::string>& metrics, int decimals) {
  std::ostringstream o;
  o << "gold: " << r.gold_name << '\n'
    << "pred: " << r.pred_name << '\n'
    << "cue match: " << to_string(r.cue_match)
    << "  punctuation: " << (r.punct_stripped ? "ignored" : "kept")
    << "  CNS denominator: " << cns_name(r.cns_denominator) << "\n\n";

  if (metrics.empty()) {
    const auto& cues = r.cue_match == CueMatchMode::Exact ? r.cues_exact_b : r.cues_partial_b;
    std::string system = base_name(r.pred_name);
    std::size_t width = std::max<std::size_t>(system.size(), 6) + 2;
    o << std::left << std::setw(static_cast<int>(width)) << "System" << std::right
      << std::setw(8) << (r.cue_match == CueMatchMode::Exact ? "Cues-B" : "Cues-Bp")
      << std::setw(8) << "SCM" << std::setw(16) << "SCM-B (NIS_ex)" << std::setw(8) << "ST P"
      << std::setw(8) << "ST R" << std::setw(8) << "ST F1" << std::setw(11) << "NIS_tok P"
      << std::setw(11) << "NIS_tok R" << std::setw(12) << "NIS_tok F1" << '\n';
    o << std::left << std::setw(static_cast<int>(width)) << system << std::right
      << std::setw(8) << pct(cues.f1, decimals) << std::setw(8) << pct(r.scm.f1, decimals)
      << std::setw(16) << pct(r.scm_b.f1, decimals) << std::setw(8)
      << pct(r.st.precision, decimals) << std::setw(8) << pct(r.st.recall, decimals)
      << std::setw(8) << pct(r.st.f1, decimals) << std::setw(11)
      << pct(r.nis_tok.precision, decimals) << std::setw(11) << pct(r.nis_tok.recall, decimals)
      << std::setw(12) << pct(r.nis_tok.f1, decimals) << "\n\n";
  }

  o << std::left << std::setw(18) << "Metric" << std::right << std::setw(8) << "P"
    << std::setw(8) << "R" << std::setw(8) << "F1" << "   counts\n";
  for (const auto& k : selected(metrics)) {
    o << std::left << std::setw(18) << label(k) << std::right;
    if (k == "cns") {
      o << std::setw(8) << "-" << std::setw(8) << "-" << std::setw(8) << pct(r.cns.value, decimals)
        << "   " << raw(r.cns.numerator) << "/" << raw(r.cns.denominator) << '\n';
      continue;
    }
    const auto& m = r.prf(k);
    o << std::setw(8) << pct(m.precision, decimals) << std::setw(8) << pct(m.recall, decimals)
      << std::setw(8) << pct(m.f1, decimals) << "   P " << raw(m.precision_numerator) << "/"
      << raw(m.precision_denominator) << "  R " << raw(m.recall_numerator) << "/"
      << raw(m.recall_denominator) << '\n';
  }
  return o.str();
}

std::vector<MetricDelta> compare_reports(const MetricReport& a, const MetricReport& b) {
  std::vector<MetricDelta> out;
  for (const auto& k : MetricReport::prf_keys()) {
    const auto& x = a.prf(k);
    const auto& y = b.prf(k);
    out.push_back({k, y.precision - x.precision, y.recall - x.recall, y.f1 - x.f1});
  }
  const double d = b.cns.value - a.cns.value;
  out.push_back({"cns", d, d, d});
  return out;
}

nlohmann::json comparison_to_json(const MetricReport& a, const MetricReport& b) {
  nlohmann::json deltas;
  for (const auto& d : compare_reports(a, b))
    deltas[d.key] = {{"precision", d.precision}, {"recall", d.recall}, {"f1", d.f1}};
  return {{"schema_version", kReportSchemaVersion}, {"a", to_json(a)}, {"b", to_json(b)},
          {"delta", deltas}};
}

namespace {

double value_of(const MetricReport& r, const std::string& key, int which) {
  if (key == "cns") return r.cns.value;
  const auto& m = r.prf(key);
  return which == 0 ? m.precision : which == 1 ? m.recall : m.f1;
}

}  // namespace

std::string comparison_to_tsv(const MetricReport& a, const MetricReport& b,
                              const std::vector<std::string>& metrics, int decimals) {
  std::ostringstream o;
  o << "metric\tA_P\tA_R\tA_F1\tB_P\tB_R\tB_F1\tdelta_P\tdelta_R\tdelta_F1\n";
  for (const auto& k : selected(metrics)) {
    o << k;
    for (const auto* r : {&a, &b})
      for (int w = 0; w < 3; ++w) o << '\t' << pct(value_of(*r, k, w), decimals);
    for (int w = 0; w < 3; ++w)
      o << '\t' << fixed(round_percent(value_of(b, k, w) - value_of(a, k, w), decimals), decimals);
    o << '\n';
  }
  return o.str();
}

std::string comparison_to_text(const MetricReport& a, const MetricReport& b,
                               const std::vector<std::string>& metrics, int decimals) {
  std::ostringstream o;
  o << "gold: " << a.gold_name << '\n'
    << "A:    " << a.pred_name << '\n'
    << "B:    " << b.pred_name << "\n\n";
  o << std::left << std::setw(18) << "Metric" << std::right << std::setw(22) << "A  P/R/F1"
    << std::setw(22) << "B  P/R/F1" << std::setw(10) << "dF1" << std::setw(8) << "best" << '\n';
  for (const auto& k : selected(metrics)) {
    auto triple = [&](const MetricReport& r) {
      if (k == "cns") return "-/-/" + pct(r.cns.value, decimals);
      const auto& m = r.prf(k);
      return pct(m.precision, decimals) + "/" + pct(m.recall, decimals) + "/" + pct(m.f1, decimals);
    };
    const double fa = value_of(a, k, 2), fb = value_of(b, k, 2);
    const double ra = round_percent(fa, decimals), rb = round_percent(fb, decimals);
    o << std::left << std::setw(18) << label(k) << std::right << std::setw(22) << triple(a)
      << std::setw(22) << triple(b) << std::setw(10)
      << fixed(round_percent(fb - fa, decimals), decimals) << std::setw(8)
      << (ra > rb ? "A" : rb > ra ? "B" : "=") << '\n';
  }
  return o.str();
}

}  // namespace negeval
