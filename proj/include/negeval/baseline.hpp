#ifndef NEGEVAL_BASELINE_HPP
#define NEGEVAL_BASELINE_HPP

#include "negeval/model.hpp"

namespace negeval {

/// Punctuation baseline: every gold instance keeps its cue; its scope becomes
/// the tokens after the last cue token up to (excluding) the next punctuation
/// token or the end of the sentence. Cue tokens are never part of the scope
/// and events are left empty.
Corpus punct_baseline(const Corpus& gold);

}  // namespace negeval

#endif  // NEGEVAL_BASELINE_HPP
