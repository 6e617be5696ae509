#include "negeval/baseline.hpp"

namespace negeval {

Corpus punct_baseline(const Corpus& gold) {
  Corpus out;
  out.name = gold.name + " [punct-baseline]";
  out.sentences.reserve(gold.sentences.size());
  for (const auto& s : gold.sentences) {
    Sentence p;
    p.doc_id = s.doc_id;
    p.sent_index = s.sent_index;
    p.tokens = s.tokens;
    for (const auto& inst : s.instances) {
      NegationInstance b;
      b.instance_id = inst.instance_id;
      b.cue = inst.cue;
      if (!inst.cue.empty()) {
        const auto cue_tokens = inst.cue.tokens();
        for (auto t = cue_tokens.back() + 1; t < s.tokens.size() && !s.tokens[t].is_punct; ++t)
          if (!inst.cue.contains_token(t)) b.scope.insert(AnnotationElement(t));
      }
      p.instances.push_back(std::move(b));
    }
    out.sentences.push_back(std::move(p));
  }
  return out;
}

}  // namespace negeval
