#include "negeval/matching.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "negeval/error.hpp"

namespace negeval {

std::string to_string(CueMatchMode mode) {
  return mode == CueMatchMode::Exact ? "exact" : "partial";
}

CueMatchMode cue_match_mode_from_string(const std::string& s) {
  if (s == "exact") return CueMatchMode::Exact;
  if (s == "partial") return CueMatchMode::Partial;
  throw UsageError("unknown cue match mode '" + s + "' (expected exact or partial)");
}

bool cues_match(const ElementSet& gold, const ElementSet& pred, CueMatchMode mode) {
  return mode == CueMatchMode::Exact ? gold == pred : gold.intersects(pred);
}

namespace {

std::vector<std::size_t> processing_order(const std::vector<NegationInstance>& instances) {
  std::vector<std::size_t> order(instances.size());
  std::iota(order.begin(), order.end(), 0);
  auto first_cue = [&](std::size_t i) {
    return instances[i].cue.empty() ? std::size_t(-1) : instances[i].cue.front().token();
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto fa = first_cue(a), fb = first_cue(b);
    if (fa != fb) return fa < fb;
    return instances[a].instance_id < instances[b].instance_id;
  });
  return order;
}

std::string key(const std::string& doc, std::size_t sent) {
  return "(" + doc + ", " + std::to_string(sent) + ")";
}

}  // namespace

InstanceAlignment align(const Sentence& gold, const Sentence& pred, CueMatchMode mode) {
  if (gold.doc_id != pred.doc_id || gold.sent_index != pred.sent_index ||
      gold.tokens.size() != pred.tokens.size())
    throw AlignmentError("sentence " + key(gold.doc_id, gold.sent_index) + " with " +
                         std::to_string(gold.tokens.size()) + " tokens cannot be aligned to " +
                         key(pred.doc_id, pred.sent_index) + " with " +
                         std::to_string(pred.tokens.size()) + " tokens");
  InstanceAlignment a;
  a.doc_id = gold.doc_id;
  a.sent_index = gold.sent_index;
  a.mode = mode;

  const auto gold_order = processing_order(gold.instances);
  const auto pred_order = processing_order(pred.instances);
  std::vector<bool> taken(pred.instances.size(), false);
  for (auto g : gold_order) {
    const auto& gi = gold.instances[g];
    bool found = false;
    for (auto p : pred_order) {
      if (taken[p] || !cues_match(gi.cue, pred.instances[p].cue, mode)) continue;
      taken[p] = true;
      a.matched.emplace_back(gi, pred.instances[p]);
      found = true;
      break;
    }
    if (!found) a.unmatched_gold.push_back(gi);
  }
  for (auto p : pred_order) {
    if (taken[p]) continue;
    const auto& pi = pred.instances[p];
    bool overlap = false;
    if (mode == CueMatchMode::Exact)
      overlap = std::any_of(gold.instances.begin(), gold.instances.end(),
                            [&](const NegationInstance& gi) { return gi.cue.intersects(pi.cue); });
    a.unmatched_pred.push_back(UnmatchedPrediction{pi, overlap});
  }
  return a;
}

std::vector<InstanceAlignment> align_corpus(const Corpus& gold, const Corpus& pred,
                                            CueMatchMode mode) {
  std::map<std::pair<std::string, std::size_t>, const Sentence*> by_key;
  for (const auto& s : pred.sentences) by_key.emplace(std::make_pair(s.doc_id, s.sent_index), &s);

  std::vector<std::string> missing;
  std::vector<InstanceAlignment> out;
  out.reserve(gold.sentences.size());
  std::size_t found = 0;
  for (const auto& g : gold.sentences) {
    auto it = by_key.find({g.doc_id, g.sent_index});
    if (it == by_key.end()) {
      missing.push_back("missing from prediction: " + key(g.doc_id, g.sent_index));
      continue;
    }
    ++found;
    out.push_back(align(g, *it->second, mode));
  }
  if (found != pred.sentences.size()) {
    std::map<std::pair<std::string, std::size_t>, bool> gold_keys;
    for (const auto& g : gold.sentences) gold_keys[{g.doc_id, g.sent_index}] = true;
    for (const auto& p : pred.sentences)
      if (!gold_keys.count({p.doc_id, p.sent_index}))
        missing.push_back("missing from gold: " + key(p.doc_id, p.sent_index));
  }
  if (!missing.empty()) {
    std::string msg = "sentence sets differ";
    for (const auto& m : missing) msg += "; " + m;
    throw AlignmentError(msg);
  }
  return out;
}

}  // namespace negeval
