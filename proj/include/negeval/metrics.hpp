#ifndef NEGEVAL_METRICS_HPP
#define NEGEVAL_METRICS_HPP

#include <functional>
#include <string>
#include <vector>

#include "negeval/matching.hpp"
#include "negeval/model.hpp"

namespace negeval {

/// Precision/recall/F1 together with the sums they were computed from.
/// Numerators are real-valued because instance scores are.
struct PRF {
  double precision_numerator = 0;
  double precision_denominator = 0;
  double recall_numerator = 0;
  double recall_denominator = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;

  /// A zero denominator gives 0, except when `vacuous` (both gold and
  /// prediction sides are empty), which gives P = R = F1 = 1.
  static PRF from_ratios(double p_num, double p_den, double r_num, double r_den, bool vacuous);

  friend bool operator==(const PRF&, const PRF&) = default;
};

/// 2PR / (P + R), 0 when P + R = 0.
double f1_score(double precision, double recall);

/// Ratio as a percentage rounded half away from zero to `decimals` places.
double round_percent(double ratio, int decimals = 1);

struct ScopeScore {
  double precision = 0;
  double recall = 0;
};

/// f_tok: |s_g ∩ s_p| / |s_p| and |s_g ∩ s_p| / |s_g|, each 1 for an empty set.
ScopeScore f_tok(const ElementSet& gold_scope, const ElementSet& pred_scope);
/// f_ex: (1, 1) if the scopes are equal, else (0, 0).
ScopeScore f_exact(const ElementSet& gold_scope, const ElementSet& pred_scope);

/// Per-instance scope scoring functions (f_P, f_R); both must map into [0, 1].
struct ScopeScorer {
  std::string name;
  std::function<ScopeScore(const ElementSet&, const ElementSet&)> score;

  static ScopeScorer token() { return {"token", f_tok}; }
  static ScopeScorer exact() { return {"exact", f_exact}; }
};

/// How matched instances are weighted in the instance-based scores.
/// Uniform: 1/|I_p| (precision), 1/|I_g| (recall).
/// ScopeLength: |s_p| / Σ|s_p| and |s_g| / Σ|s_g|; with the token scorer this
/// reduces to the scope-token metric.
enum class InstanceWeighting { Uniform, ScopeLength };

/// Negation-instance based scores over EXACT cue alignments.
PRF nis(const std::vector<InstanceAlignment>& alignments, const ScopeScorer& scorer,
        InstanceWeighting weighting = InstanceWeighting::Uniform);

/// Scope tokens: Σ_matched |s_g ∩ s_p| over Σ|s_p| (precision) and Σ|s_g|
/// (recall). A token in two scopes counts twice.
PRF scope_tokens(const std::vector<InstanceAlignment>& alignments);

enum class ScoreVariant { Standard, B };

/// Scope-level exact match. TP = matched pairs with equal scopes. Standard
/// precision is TP / (TP + predictions whose cue overlaps no gold cue); B
/// precision is TP / |I_p|.
PRF scm(const std::vector<InstanceAlignment>& alignments, ScoreVariant variant);

/// Cue detection. TP = matched pairs under `mode` (which must be the mode the
/// alignments were built with).
PRF cue_scores(const std::vector<InstanceAlignment>& alignments, CueMatchMode mode,
               ScoreVariant variant);

struct Ratio {
  double numerator = 0;
  double denominator = 0;
  double value = 0;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

enum class CnsDenominator { NegationSentences, AllSentences };

/// Share of sentences whose predicted (cue, scope) instances equal the gold
/// ones. By default only sentences with at least one gold instance count.
Ratio cns(const Corpus& gold, const Corpus& pred,
          CnsDenominator denominator = CnsDenominator::NegationSentences);

}  // namespace negeval

#endif  // NEGEVAL_METRICS_HPP
