#include "negeval/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "negeval/error.hpp"

namespace negeval {

PRF PRF::from_ratios(double p_num, double p_den, double r_num, double r_den, bool vacuous) {
  PRF out{p_num, p_den, r_num, r_den, 0, 0, 0};
  if (vacuous) {
    out.precision = out.recall = out.f1 = 1.0;
    return out;
  }
  out.precision = p_den > 0 ? p_num / p_den : 0.0;
  out.recall = r_den > 0 ? r_num / r_den : 0.0;
  out.f1 = f1_score(out.precision, out.recall);
  return out;
}

double f1_score(double precision, double recall) {
  return precision + recall > 0 ? 2 * precision * recall / (precision + recall) : 0.0;
}

double round_percent(double ratio, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // Snap away representation noise (0.85 * 1000 = 849.999...) before rounding.
  const double scaled = ratio * 100.0 * scale;
  const double snapped = std::round(scaled * 1e6) / 1e6;
  return std::round(snapped) / scale;
}

ScopeScore f_tok(const ElementSet& gold_scope, const ElementSet& pred_scope) {
  const auto overlap = static_cast<double>(gold_scope.intersection_size(pred_scope));
  ScopeScore s;
  s.precision = pred_scope.empty() ? 1.0 : overlap / static_cast<double>(pred_scope.size());
  s.recall = gold_scope.empty() ? 1.0 : overlap / static_cast<double>(gold_scope.size());
  return s;
}

ScopeScore f_exact(const ElementSet& gold_scope, const ElementSet& pred_scope) {
  return gold_scope == pred_scope ? ScopeScore{1.0, 1.0} : ScopeScore{0.0, 0.0};
}

namespace {

void require_exact(const std::vector<InstanceAlignment>& alignments, const char* metric) {
  for (const auto& a : alignments)
    if (a.mode != CueMatchMode::Exact)
      throw UsageError(std::string(metric) + " requires alignments built with exact cue matching");
}

// Sums in ascending order so the result depends only on the multiset of
// terms, not on the order pairs were matched in.
double ordered_sum(std::vector<double>& terms) {
  std::sort(terms.begin(), terms.end());
  double s = 0;
  for (double t : terms) s += t;
  return s;
}

struct Totals {
  std::size_t gold_instances = 0;
  std::size_t pred_instances = 0;
  std::size_t gold_scope_tokens = 0;
  std::size_t pred_scope_tokens = 0;
};

Totals totals(const std::vector<InstanceAlignment>& alignments) {
  Totals t;
  for (const auto& a : alignments) {
    t.gold_instances += a.gold_count();
    t.pred_instances += a.pred_count();
    for (const auto& [g, p] : a.matched) {
      t.gold_scope_tokens += g.scope.size();
      t.pred_scope_tokens += p.scope.size();
    }
    for (const auto& g : a.unmatched_gold) t.gold_scope_tokens += g.scope.size();
    for (const auto& p : a.unmatched_pred) t.pred_scope_tokens += p.instance.scope.size();
  }
  return t;
}

}  // namespace

PRF nis(const std::vector<InstanceAlignment>& alignments, const ScopeScorer& scorer,
        InstanceWeighting weighting) {
  require_exact(alignments, "NIS");
  const auto t = totals(alignments);
  std::vector<double> p_terms, r_terms;
  for (const auto& a : alignments)
    for (const auto& [g, p] : a.matched) {
      const auto s = scorer.score(g.scope, p.scope);
      if (weighting == InstanceWeighting::Uniform) {
        p_terms.push_back(s.precision);
        r_terms.push_back(s.recall);
      } else {
        p_terms.push_back(static_cast<double>(p.scope.size()) * s.precision);
        r_terms.push_back(static_cast<double>(g.scope.size()) * s.recall);
      }
    }
  const double p_num = ordered_sum(p_terms);
  const double r_num = ordered_sum(r_terms);
  if (weighting == InstanceWeighting::Uniform)
    return PRF::from_ratios(p_num, static_cast<double>(t.pred_instances), r_num,
                            static_cast<double>(t.gold_instances),
                            t.pred_instances == 0 && t.gold_instances == 0);
  return PRF::from_ratios(p_num, static_cast<double>(t.pred_scope_tokens), r_num,
                          static_cast<double>(t.gold_scope_tokens),
                          t.pred_scope_tokens == 0 && t.gold_scope_tokens == 0);
}

PRF scope_tokens(const std::vector<InstanceAlignment>& alignments) {
  require_exact(alignments, "scope tokens");
  const auto t = totals(alignments);
  std::size_t overlap = 0;
  for (const auto& a : alignments)
    for (const auto& [g, p] : a.matched) overlap += g.scope.intersection_size(p.scope);
  return PRF::from_ratios(static_cast<double>(overlap), static_cast<double>(t.pred_scope_tokens),
                          static_cast<double>(overlap), static_cast<double>(t.gold_scope_tokens),
                          t.pred_scope_tokens == 0 && t.gold_scope_tokens == 0);
}

PRF scm(const std::vector<InstanceAlignment>& alignments, ScoreVariant variant) {
  require_exact(alignments, "SCM");
  const auto t = totals(alignments);
  std::size_t tp = 0, full_fp = 0;
  for (const auto& a : alignments) {
    for (const auto& [g, p] : a.matched)
      if (g.scope == p.scope) ++tp;
    for (const auto& u : a.unmatched_pred)
      if (!u.partial_only) ++full_fp;
  }
  const bool vacuous = t.gold_instances == 0 && t.pred_instances == 0;
  const double p_den = variant == ScoreVariant::B ? static_cast<double>(t.pred_instances)
                                                  : static_cast<double>(tp + full_fp);
  return PRF::from_ratios(static_cast<double>(tp), p_den, static_cast<double>(tp),
                          static_cast<double>(t.gold_instances), vacuous);
}

PRF cue_scores(const std::vector<InstanceAlignment>& alignments, CueMatchMode mode,
               ScoreVariant variant) {
  for (const auto& a : alignments)
    if (a.mode != mode)
      throw UsageError("cue scores for " + to_string(mode) +
                       " matching requested on alignments built with " + to_string(a.mode) +
                       " matching");
  const auto t = totals(alignments);
  std::size_t tp = 0, full_fp = 0;
  for (const auto& a : alignments) {
    tp += a.matched.size();
    for (const auto& u : a.unmatched_pred) {
      bool overlaps = false;
      for (const auto& [g, p] : a.matched) overlaps = overlaps || g.cue.intersects(u.instance.cue);
      for (const auto& g : a.unmatched_gold) overlaps = overlaps || g.cue.intersects(u.instance.cue);
      if (!overlaps) ++full_fp;
    }
  }
  const bool vacuous = t.gold_instances == 0 && t.pred_instances == 0;
  const double p_den = variant == ScoreVariant::B ? static_cast<double>(t.pred_instances)
                                                  : static_cast<double>(tp + full_fp);
  return PRF::from_ratios(static_cast<double>(tp), p_den, static_cast<double>(tp),
                          static_cast<double>(t.gold_instances), vacuous);
}

namespace {

bool same_instances(std::vector<NegationInstance> a, std::vector<NegationInstance> b) {
  if (a.size() != b.size()) return false;
  auto by_annotation = [](const NegationInstance& x, const NegationInstance& y) {
    if (x.cue.elements() != y.cue.elements()) return x.cue.elements() < y.cue.elements();
    return x.scope.elements() < y.scope.elements();
  };
  std::sort(a.begin(), a.end(), by_annotation);
  std::sort(b.begin(), b.end(), by_annotation);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!same_cue_and_scope(a[i], b[i])) return false;
  return true;
}

}  // namespace

Ratio cns(const Corpus& gold, const Corpus& pred, CnsDenominator denominator) {
  std::map<std::pair<std::string, std::size_t>, const Sentence*> by_key;
  for (const auto& s : pred.sentences) by_key.emplace(std::make_pair(s.doc_id, s.sent_index), &s);
  if (by_key.size() != pred.sentences.size() || pred.sentences.size() != gold.sentences.size())
    throw AlignmentError("CNS: gold and prediction cover different sentence sets");
  Ratio r;
  std::size_t gold_instances = 0, pred_instances = 0;
  for (const auto& g : gold.sentences) {
    auto it = by_key.find({g.doc_id, g.sent_index});
    if (it == by_key.end())
      throw AlignmentError("CNS: sentence (" + g.doc_id + ", " + std::to_string(g.sent_index) +
                           ") missing from prediction");
    const auto& p = *it->second;
    gold_instances += g.instances.size();
    pred_instances += p.instances.size();
    if (g.instances.empty() && denominator == CnsDenominator::NegationSentences) continue;
    r.denominator += 1;
    if (same_instances(g.instances, p.instances)) r.numerator += 1;
  }
  if (r.denominator > 0)
    r.value = r.numerator / r.denominator;
  else
    r.value = gold_instances == 0 && pred_instances == 0 ? 1.0 : 0.0;
  return r;
}

}  // namespace negeval
