#ifndef NEGEVAL_MATCHING_HPP
#define NEGEVAL_MATCHING_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "negeval/model.hpp"

namespace negeval {

/// EXACT: c_g = c_p.  PARTIAL: c_g and c_p share an element.
enum class CueMatchMode { Exact, Partial };

std::string to_string(CueMatchMode mode);
CueMatchMode cue_match_mode_from_string(const std::string& s);

bool cues_match(const ElementSet& gold, const ElementSet& pred, CueMatchMode mode);

struct UnmatchedPrediction {
  NegationInstance instance;
  /// EXACT mode only: the cue overlaps some gold cue without equalling it.
  bool partial_only = false;
};

/// One-to-one pairing of the gold and predicted instances of one sentence.
/// Every instance appears in exactly one of matched / unmatched_*.
struct InstanceAlignment {
  std::string doc_id;
  std::size_t sent_index = 0;
  CueMatchMode mode = CueMatchMode::Exact;
  std::vector<std::pair<NegationInstance, NegationInstance>> matched;  // (gold, pred)
  std::vector<NegationInstance> unmatched_gold;
  std::vector<UnmatchedPrediction> unmatched_pred;

  std::size_t gold_count() const { return matched.size() + unmatched_gold.size(); }
  std::size_t pred_count() const { return matched.size() + unmatched_pred.size(); }
};

/// Greedy deterministic matching: gold instances in order of (first cue
/// token, instance_id) each take the first unmatched prediction in the same
/// order that satisfies the mode. Throws AlignmentError when the sentences
/// differ in doc_id, sent_index or token count.
InstanceAlignment align(const Sentence& gold, const Sentence& pred, CueMatchMode mode);

/// Per-sentence alignments in gold corpus order. Throws AlignmentError
/// naming every (doc_id, sent_index) present in only one corpus.
std::vector<InstanceAlignment> align_corpus(const Corpus& gold, const Corpus& pred,
                                            CueMatchMode mode);

}  // namespace negeval

#endif  // NEGEVAL_MATCHING_HPP
