#include "negeval/model.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace negeval {

AnnotationElement AnnotationElement::part(std::size_t token, std::string_view surface,
                                          std::size_t begin, std::size_t end) {
  if (begin >= end || end > surface.size())
    throw std::invalid_argument("subspan [" + std::to_string(begin) + ", " +
                                std::to_string(end) + ") outside token '" +
                                std::string(surface) + "'");
  AnnotationElement e(token);
  if (begin == 0 && end == surface.size()) return e;
  e.begin_ = begin;
  e.end_ = end;
  e.text_ = std::string(surface.substr(begin, end - begin));
  return e;
}

ElementSet::ElementSet(std::initializer_list<std::size_t> tokens) {
  for (auto t : tokens) insert(AnnotationElement(t));
}

ElementSet::ElementSet(std::vector<AnnotationElement> elements) : items_(std::move(elements)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

ElementSet ElementSet::from_tokens(const std::vector<std::size_t>& tokens) {
  std::vector<AnnotationElement> v;
  v.reserve(tokens.size());
  for (auto t : tokens) v.emplace_back(t);
  return ElementSet(std::move(v));
}

bool ElementSet::insert(const AnnotationElement& e) {
  auto it = std::lower_bound(items_.begin(), items_.end(), e);
  if (it != items_.end() && *it == e) return false;
  items_.insert(it, e);
  return true;
}

bool ElementSet::erase(const AnnotationElement& e) {
  auto it = std::lower_bound(items_.begin(), items_.end(), e);
  if (it == items_.end() || !(*it == e)) return false;
  items_.erase(it);
  return true;
}

bool ElementSet::contains(const AnnotationElement& e) const {
  return std::binary_search(items_.begin(), items_.end(), e);
}

bool ElementSet::contains_token(std::size_t token) const {
  return std::any_of(items_.begin(), items_.end(),
                     [token](const AnnotationElement& e) { return e.token() == token; });
}

std::size_t ElementSet::intersection_size(const ElementSet& other) const {
  std::size_t n = 0;
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++n;
      ++a;
      ++b;
    }
  }
  return n;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

ElementSet ElementSet::united(const ElementSet& other) const {
  ElementSet out;
  std::set_union(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                 std::back_inserter(out.items_));
  return out;
}

ElementSet ElementSet::minus(const ElementSet& other) const {
  ElementSet out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(out.items_));
  return out;
}

std::vector<std::size_t> ElementSet::tokens() const {
  std::vector<std::size_t> out;
  for (const auto& e : items_)
    if (out.empty() || out.back() != e.token()) out.push_back(e.token());
  return out;
}

bool same_cue_and_scope(const NegationInstance& a, const NegationInstance& b) {
  return a.cue == b.cue && a.scope == b.scope;
}

std::size_t Corpus::instance_count() const {
  std::size_t n = 0;
  for (const auto& s : sentences) n += s.instances.size();
  return n;
}

bool structurally_equal(const Corpus& a, const Corpus& b) { return a.sentences == b.sentences; }

std::string Diagnostic::to_string() const {
  std::string out = severity == Severity::Error ? "error" : "warning";
  out += "[" + code + "] " + doc_id + ":" + std::to_string(sent_index);
  if (instance_id) out += "#" + std::to_string(*instance_id);
  out += ": " + message;
  return out;
}

namespace {

Diagnostic make_diag(Severity sev, std::string code, const Sentence& s,
                     std::optional<std::size_t> inst, std::string msg) {
  return Diagnostic{sev, std::move(code), s.doc_id, s.sent_index, inst, std::move(msg)};
}

void check_elements(const Sentence& s, const NegationInstance& inst, const ElementSet& set,
                    const char* role, std::vector<Diagnostic>& out) {
  for (const auto& e : set) {
    if (e.token() >= s.tokens.size()) {
      out.push_back(make_diag(Severity::Error, "token-out-of-range", s, inst.instance_id,
                              std::string(role) + " references token " +
                                  std::to_string(e.token()) + " of a " +
                                  std::to_string(s.tokens.size()) + "-token sentence"));
      continue;
    }
    if (!e.is_whole_token()) {
      const auto& surface = s.tokens[e.token()].surface;
      if (e.end() > surface.size() ||
          surface.compare(e.begin(), e.end() - e.begin(), e.text()) != 0)
        out.push_back(make_diag(Severity::Error, "invalid-subspan", s, inst.instance_id,
                                std::string(role) + " subspan '" + e.text() +
                                    "' does not lie in token '" + surface + "'"));
    }
  }
}

}  // namespace

std::vector<Diagnostic> validate(const Corpus& corpus) {
  std::vector<Diagnostic> out;
  std::set<std::pair<std::string, std::size_t>> seen;
  for (const auto& s : corpus.sentences) {
    if (!seen.emplace(s.doc_id, s.sent_index).second)
      out.push_back(make_diag(Severity::Error, "duplicate-sentence", s, std::nullopt,
                              "sentence key appears more than once"));
    for (std::size_t i = 0; i < s.tokens.size(); ++i) {
      if (s.tokens[i].index != i)
        out.push_back(make_diag(Severity::Error, "token-index", s, std::nullopt,
                                "token at position " + std::to_string(i) + " has index " +
                                    std::to_string(s.tokens[i].index)));
      if (s.tokens[i].surface.empty())
        out.push_back(make_diag(Severity::Error, "empty-surface", s, std::nullopt,
                                "token " + std::to_string(i) + " has an empty surface"));
    }
    for (const auto& inst : s.instances) {
      if (inst.cue.empty())
        out.push_back(make_diag(Severity::Error, "empty-cue", s, inst.instance_id,
                                "instance has no cue"));
      check_elements(s, inst, inst.cue, "cue", out);
      check_elements(s, inst, inst.scope, "scope", out);
      check_elements(s, inst, inst.event, "event", out);
    }
    for (std::size_t i = 0; i < s.instances.size(); ++i)
      for (std::size_t j = i + 1; j < s.instances.size(); ++j)
        if (s.instances[i].cue.intersects(s.instances[j].cue))
          out.push_back(make_diag(Severity::Warning, "overlapping-cue", s,
                                  s.instances[j].instance_id,
                                  "cue overlaps the cue of instance " +
                                      std::to_string(s.instances[i].instance_id)));
  }
  return out;
}

namespace {

ElementSet without_punct(const ElementSet& set, const std::vector<Token>& tokens) {
  std::vector<AnnotationElement> kept;
  kept.reserve(set.size());
  for (const auto& e : set)
    if (e.token() >= tokens.size() || !tokens[e.token()].is_punct) kept.push_back(e);
  return ElementSet(std::move(kept));
}

}  // namespace

Corpus strip_punctuation(const Corpus& corpus, std::vector<Diagnostic>* diagnostics) {
  Corpus out;
  out.name = corpus.name;
  out.sentences.reserve(corpus.sentences.size());
  for (const auto& s : corpus.sentences) {
    Sentence t;
    t.doc_id = s.doc_id;
    t.sent_index = s.sent_index;
    t.tokens = s.tokens;
    for (const auto& inst : s.instances) {
      NegationInstance n;
      n.instance_id = inst.instance_id;
      n.cue = without_punct(inst.cue, s.tokens);
      n.scope = without_punct(inst.scope, s.tokens);
      n.event = without_punct(inst.event, s.tokens);
      if (n.cue.empty() && !inst.cue.empty()) {
        if (diagnostics)
          diagnostics->push_back(make_diag(Severity::Warning, "punct-cue-dropped", s,
                                           inst.instance_id,
                                           "cue consists of punctuation only; instance dropped"));
        continue;
      }
      t.instances.push_back(std::move(n));
    }
    out.sentences.push_back(std::move(t));
  }
  return out;
}

}  // namespace negeval
