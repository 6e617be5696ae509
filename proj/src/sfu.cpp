#include <algorithm>
#include <iterator>
#include <map>

#include "negeval/error.hpp"
#include "negeval/xml.hpp"
#include "negeval/xml_corpora.hpp"

namespace negeval {

namespace {

struct CueMarkup {
  std::string type;
  std::vector<std::size_t> tokens;
  std::size_t line = 0;
};

struct ScopeMarkup {
  std::vector<std::size_t> tokens;
  std::size_t line = 0;
};

struct Walk {
  Sentence sentence;
  std::map<std::string, CueMarkup> cues;
  std::vector<std::string> cue_order;
  std::map<std::string, ScopeMarkup> scopes;  // keyed by referenced cue id
  const PunctuationPolicy* punct = nullptr;
  const std::string* source = nullptr;
};

std::string trimmed(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

void walk(const xml::Element& e, Walk& w, std::vector<std::string>& open_cues,
          std::vector<std::vector<std::string>>& open_scopes) {
  for (const auto& child : e.children) {
    const auto* ptr = std::get_if<std::unique_ptr<xml::Element>>(&child);
    if (!ptr) continue;
    const auto& el = **ptr;
    if (el.name == "W" || el.name == "C") {
      auto surface = trimmed(el.text());
      if (surface.empty()) continue;
      Token tok;
      tok.index = w.sentence.tokens.size();
      tok.surface = surface;
      tok.is_punct = w.punct->is_punct(surface, std::nullopt);
      for (const auto& id : open_cues) w.cues[id].tokens.push_back(tok.index);
      for (const auto& refs : open_scopes)
        for (const auto& id : refs) w.scopes[id].tokens.push_back(tok.index);
      w.sentence.tokens.push_back(std::move(tok));
    } else if (el.name == "cue") {
      auto id = el.attribute("ID");
      if (!id) throw ParseError(*w.source, el.line, "<cue> without ID");
      auto [it, fresh] = w.cues.try_emplace(*id);
      if (fresh) {
        it->second.type = el.attribute("type").value_or("");
        it->second.line = el.line;
        w.cue_order.push_back(*id);
      }
      open_cues.push_back(*id);
      walk(el, w, open_cues, open_scopes);
      open_cues.pop_back();
    } else if (el.name == "xcope") {
      std::vector<std::string> refs;
      for (const auto* r : el.children_named("ref")) {
        auto id = r->attribute("ID");
        if (!id) throw ParseError(*w.source, r->line, "<ref> without ID");
        refs.push_back(*id);
        auto& scope = w.scopes[*id];
        if (scope.line == 0) scope.line = r->line;
      }
      if (refs.empty()) throw ParseError(*w.source, el.line, "<xcope> without a cue <ref>");
      open_scopes.push_back(std::move(refs));
      walk(el, w, open_cues, open_scopes);
      open_scopes.pop_back();
    } else {
      walk(el, w, open_cues, open_scopes);
    }
  }
}

void collect_sentences(const xml::Element& e, std::vector<const xml::Element*>& out) {
  for (const auto& child : e.children)
    if (const auto* c = std::get_if<std::unique_ptr<xml::Element>>(&child)) {
      if ((*c)->name == "sentence")
        out.push_back(c->get());
      else
        collect_sentences(**c, out);
    }
}

}  // namespace

Corpus parse_sfu(std::istream& in, const std::string& source, const std::string& doc_id,
                 const PunctuationPolicy& punct) {
  std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto root = xml::parse(doc, source);
  std::vector<const xml::Element*> sentences;
  if (root->name == "sentence")
    sentences.push_back(root.get());
  else
    collect_sentences(*root, sentences);

  Corpus corpus;
  corpus.name = source;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    Walk w;
    w.sentence.doc_id = doc_id;
    w.sentence.sent_index = i;
    w.punct = &punct;
    w.source = &source;
    std::vector<std::string> open_cues;
    std::vector<std::vector<std::string>> open_scopes;
    walk(*sentences[i], w, open_cues, open_scopes);

    for (const auto& [id, scope] : w.scopes)
      if (!w.cues.count(id))
        throw ParseError(source, scope.line, "xcope refers to unknown cue " + id);

    std::vector<NegationInstance> instances;
    for (const auto& id : w.cue_order) {
      const auto& cue = w.cues.at(id);
      if (cue.type != "negation") continue;
      NegationInstance inst;
      inst.cue = ElementSet::from_tokens(cue.tokens);
      if (inst.cue.empty()) throw ParseError(source, cue.line, "negation cue covers no token");
      if (auto it = w.scopes.find(id); it != w.scopes.end())
        inst.scope = ElementSet::from_tokens(it->second.tokens);
      instances.push_back(std::move(inst));
    }
    std::stable_sort(instances.begin(), instances.end(),
                     [](const NegationInstance& a, const NegationInstance& b) {
                       return a.cue.front().token() < b.cue.front().token();
                     });
    for (std::size_t k = 0; k < instances.size(); ++k) instances[k].instance_id = k;
    w.sentence.instances = std::move(instances);
    corpus.sentences.push_back(std::move(w.sentence));
  }
  return corpus;
}

}  // namespace negeval
