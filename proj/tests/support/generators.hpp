// Random corpora and oracles shared by the unit and acceptance tests.
#ifndef NEGEVAL_TESTS_GENERATORS_HPP
#define NEGEVAL_TESTS_GENERATORS_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "negeval/matching.hpp"
#include "negeval/model.hpp"
#include "negeval/punctuation.hpp"

namespace negeval::support {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct CorpusShape {
  std::size_t max_sentences = 6;
  std::size_t max_tokens = 14;
  std::size_t max_instances = 4;
  bool subspans = true;   // affix cue/scope elements
  bool metadata = true;   // lemma/pos columns
};

inline std::string random_surface(Rng& rng) {
  static const std::vector<std::string> words = {
      "no", "not", "never", "un", "the", "cat", "sat", "on", "mat", "it", "was", "impossible",
      "careless", "n't", "Holmes", "said", "be", "nothing", "without", "dislike", ",", ".",
      "''", "``", "(", ")", "?", "!", "--", "nor", "neither", "Mrs.", "well", "matter"};
  return words[uniform(rng, 0, words.size() - 1)];
}

/// Element on `tok`: whole token, or (when allowed and the surface has at
/// least two bytes) a proper prefix or suffix.
inline AnnotationElement random_element(Rng& rng, const Token& tok, bool subspans) {
  const auto n = tok.surface.size();
  if (!subspans || n < 2 || !coin(rng, 0.15)) return AnnotationElement(tok.index);
  const auto len = uniform(rng, 1, n - 1);
  return coin(rng) ? AnnotationElement::part(tok.index, tok.surface, 0, len)
                   : AnnotationElement::part(tok.index, tok.surface, n - len, n);
}

inline ElementSet random_subset(Rng& rng, const std::vector<Token>& tokens, double p, bool subspans) {
  ElementSet s;
  for (const auto& t : tokens)
    if (coin(rng, p)) s.insert(random_element(rng, t, subspans));
  return s;
}

inline NegationInstance random_instance(Rng& rng, const std::vector<Token>& tokens,
                                        const CorpusShape& shape) {
  NegationInstance inst;
  const auto first = uniform(rng, 0, tokens.size() - 1);
  inst.cue.insert(random_element(rng, tokens[first], shape.subspans));
  if (coin(rng, 0.2)) {
    const auto second = uniform(rng, 0, tokens.size() - 1);
    if (!inst.cue.contains_token(second))
      inst.cue.insert(random_element(rng, tokens[second], shape.subspans));
  }
  inst.scope = random_subset(rng, tokens, uniform(rng, 0, 6) / 10.0, shape.subspans);
  if (coin(rng, 0.3)) {
    const auto e = uniform(rng, 0, tokens.size() - 1);
    inst.event.insert(random_element(rng, tokens[e], shape.subspans));
  }
  return inst;
}

inline Sentence random_sentence(Rng& rng, const std::string& doc, std::size_t index,
                                const CorpusShape& shape) {
  Sentence s;
  s.doc_id = doc;
  s.sent_index = index;
  static const std::vector<std::string> tags = {"NN", "VB", "RB", "DT", ".", ",", "JJ"};
  const PunctuationPolicy punct;
  const auto n = uniform(rng, 1, shape.max_tokens);
  for (std::size_t i = 0; i < n; ++i) {
    Token t;
    t.index = i;
    t.surface = random_surface(rng);
    if (shape.metadata && coin(rng, 0.7)) {
      t.lemma = t.surface;
      t.pos = tags[uniform(rng, 0, tags.size() - 1)];
    }
    if (shape.metadata && coin(rng, 0.3)) t.syntax = "(S*)";
    t.is_punct = punct.is_punct(t.surface, t.pos);
    s.tokens.push_back(std::move(t));
  }
  const auto k = uniform(rng, 0, shape.max_instances);
  for (std::size_t i = 0; i < k; ++i) {
    auto inst = random_instance(rng, s.tokens, shape);
    inst.instance_id = i;
    s.instances.push_back(std::move(inst));
  }
  return s;
}

inline Corpus random_corpus(Rng& rng, const CorpusShape& shape = {}) {
  Corpus c;
  c.name = "random";
  const auto n = uniform(rng, 0, shape.max_sentences);
  for (std::size_t i = 0; i < n; ++i)
    c.sentences.push_back(random_sentence(rng, "d" + std::to_string(uniform(rng, 0, 2)), i, shape));
  return c;
}

/// Predictions over the same sentences: gold instances are kept, dropped,
/// re-scoped or given a shifted cue, and spurious instances are added.
inline Corpus perturb(Rng& rng, const Corpus& gold, const CorpusShape& shape = {}) {
  Corpus pred = gold;
  pred.name = "perturbed";
  for (auto& s : pred.sentences) {
    std::vector<NegationInstance> out;
    for (const auto& g : s.instances) {
      if (coin(rng, 0.15)) continue;
      NegationInstance p = g;
      p.event = {};
      if (coin(rng, 0.5)) {
        // Keep part of the gold scope, add a few other tokens.
        ElementSet scope;
        for (const auto& e : g.scope)
          if (coin(rng, 0.7)) scope.insert(e);
        for (const auto& t : s.tokens)
          if (!scope.contains_token(t.index) && coin(rng, 0.1)) scope.insert(AnnotationElement(t.index));
        p.scope = scope;
      }
      if (coin(rng, 0.1)) p.cue = ElementSet{uniform(rng, 0, s.tokens.size() - 1)};
      out.push_back(std::move(p));
    }
    if (!s.tokens.empty() && coin(rng, 0.2)) out.push_back(random_instance(rng, s.tokens, shape));
    std::shuffle(out.begin(), out.end(), rng);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].instance_id = i;
    s.instances = std::move(out);
  }
  return pred;
}

/// Maximum number of disjoint (gold, pred) pairs with equal cues, found by
/// exhaustive search.
inline std::size_t brute_force_max_matching(const std::vector<NegationInstance>& gold,
                                            const std::vector<NegationInstance>& pred,
                                            CueMatchMode mode = CueMatchMode::Exact) {
  std::vector<bool> used(pred.size(), false);
  std::function<std::size_t(std::size_t)> best = [&](std::size_t g) -> std::size_t {
    if (g == gold.size()) return 0;
    std::size_t result = best(g + 1);  // leave gold g unmatched
    for (std::size_t p = 0; p < pred.size(); ++p) {
      if (used[p] || !cues_match(gold[g].cue, pred[p].cue, mode)) continue;
      used[p] = true;
      result = std::max(result, 1 + best(g + 1));
      used[p] = false;
    }
    return result;
  };
  return best(0);
}

/// Laminar instance family on an `n`-token sentence: instances either use
/// disjoint tokens or one lies entirely inside the other's scope, nested at
/// most `max_depth` levels. Cue tokens never appear in any scope.
inline std::vector<NegationInstance> random_laminar_family(Rng& rng, std::size_t n,
                                                           std::size_t max_depth = 3) {
  std::vector<NegationInstance> out;
  std::function<void(std::vector<std::size_t>, std::size_t)> grow =
      [&](std::vector<std::size_t> pool, std::size_t depth) {
        const auto groups = uniform(rng, 1, 2);
        std::vector<std::vector<std::size_t>> chunks(groups + 1);
        for (auto t : pool) chunks[uniform(rng, 0, groups)].push_back(t);
        for (std::size_t g = 0; g < groups; ++g) {
          auto chunk = chunks[g];
          if (chunk.empty()) continue;
          std::shuffle(chunk.begin(), chunk.end(), rng);
          NegationInstance inst;
          const std::size_t cue_size = chunk.size() >= 3 && coin(rng, 0.25) ? 2 : 1;
          for (std::size_t i = 0; i < cue_size; ++i) inst.cue.insert(AnnotationElement(chunk[i]));
          std::vector<std::size_t> scope;
          for (std::size_t i = cue_size; i < chunk.size(); ++i)
            if (coin(rng, 0.8)) scope.push_back(chunk[i]);
          for (auto t : scope) inst.scope.insert(AnnotationElement(t));
          if (coin(rng, 0.3)) inst.event.insert(AnnotationElement(uniform(rng, 0, n - 1)));
          out.push_back(inst);
          if (depth < max_depth && scope.size() >= 2 && coin(rng, 0.7)) {
            std::vector<std::size_t> inner;
            for (auto t : scope)
              if (coin(rng, 0.6)) inner.push_back(t);
            if (!inner.empty()) grow(inner, depth + 1);
          }
        }
      };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  grow(all, 1);
  std::sort(out.begin(), out.end(), [](const NegationInstance& a, const NegationInstance& b) {
    return a.cue.front().token() < b.cue.front().token();
  });
  for (std::size_t i = 0; i < out.size(); ++i) out[i].instance_id = i;
  return out;
}

inline Sentence plain_sentence(std::size_t n, const std::string& doc = "lam", std::size_t index = 0) {
  Sentence s;
  s.doc_id = doc;
  s.sent_index = index;
  for (std::size_t i = 0; i < n; ++i) {
    Token t;
    t.index = i;
    t.surface = "w" + std::to_string(i);
    s.tokens.push_back(std::move(t));
  }
  return s;
}

}  // namespace negeval::support

#endif  // NEGEVAL_TESTS_GENERATORS_HPP
