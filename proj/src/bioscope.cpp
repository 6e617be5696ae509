#include <algorithm>
#include <iterator>
#include <map>
#include <set>
#include <sstream>

#include "negeval/error.hpp"
#include "negeval/xml.hpp"
#include "negeval/xml_corpora.hpp"

namespace negeval {

namespace {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t line = 0;
};

struct MarkedCue {
  std::string type;
  std::optional<std::string> ref;
  Span span;
};

struct FlatSentence {
  std::string text;
  std::set<std::size_t> boundaries;
  std::map<std::string, Span> scopes;
  std::vector<MarkedCue> cues;
};

void flatten(const xml::Element& e, FlatSentence& out, const std::string& source) {
  for (const auto& child : e.children) {
    if (const auto* t = std::get_if<xml::Text>(&child)) {
      out.text += t->value;
      continue;
    }
    const auto& el = *std::get<std::unique_ptr<xml::Element>>(child);
    Span span{out.text.size(), 0, el.line};
    out.boundaries.insert(span.begin);
    flatten(el, out, source);
    span.end = out.text.size();
    out.boundaries.insert(span.end);
    if (el.name == "xcope") {
      auto id = el.attribute("id");
      if (!id) throw ParseError(source, el.line, "<xcope> without id");
      if (!out.scopes.emplace(*id, span).second)
        throw ParseError(source, el.line, "duplicate xcope id " + *id);
    } else if (el.name == "cue") {
      out.cues.push_back(MarkedCue{el.attribute("type").value_or(""), el.attribute("ref"), span});
    }
  }
}

void collect(const xml::Element& e, std::string_view name, std::vector<const xml::Element*>& out) {
  for (const auto& child : e.children)
    if (const auto* c = std::get_if<std::unique_ptr<xml::Element>>(&child)) {
      if ((*c)->name == name)
        out.push_back(c->get());
      else
        collect(**c, name, out);
    }
}

std::string trimmed(std::string s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Sentence build(const xml::Element& sentence_el, const std::string& doc_id, std::size_t index,
               const Tokenizer& tokenizer, const BioScopeOptions& options,
               const std::string& source) {
  FlatSentence flat;
  flatten(sentence_el, flat, source);
  flat.boundaries.insert(0);
  flat.boundaries.insert(flat.text.size());

  std::set<std::string> referenced;
  for (const auto& c : flat.cues)
    if (c.ref) referenced.insert(*c.ref);
  for (const auto& [id, span] : flat.scopes)
    if (!referenced.count(id))
      throw ParseError(source, span.line, "xcope " + id + " has no cue referring to it");

  Sentence s;
  s.doc_id = doc_id;
  s.sent_index = index;
  std::vector<Span> token_spans;
  for (auto it = flat.boundaries.begin(); std::next(it) != flat.boundaries.end(); ++it) {
    auto b = *it;
    auto e = *std::next(it);
    for (auto& t : tokenizer(std::string_view(flat.text).substr(b, e - b))) {
      Token tok;
      tok.index = s.tokens.size();
      tok.surface = std::move(t.text);
      tok.is_punct = options.punct.is_punct(tok.surface, std::nullopt);
      s.tokens.push_back(std::move(tok));
      token_spans.push_back(Span{b + t.begin, b + t.end, 0});
    }
  }
  auto tokens_inside = [&](const Span& span) {
    ElementSet out;
    for (std::size_t i = 0; i < token_spans.size(); ++i)
      if (token_spans[i].begin >= span.begin && token_spans[i].end <= span.end)
        out.insert(AnnotationElement(i));
    return out;
  };

  // Negation cues grouped by the scope they refer to, in order of appearance.
  std::vector<std::pair<std::optional<std::string>, std::vector<const MarkedCue*>>> groups;
  for (const auto& c : flat.cues) {
    if (c.type != "negation") continue;
    if (c.ref && !flat.scopes.count(*c.ref))
      throw ParseError(source, c.span.line, "cue refers to unknown xcope " + *c.ref);
    auto g = std::find_if(groups.begin(), groups.end(),
                          [&](const auto& grp) { return c.ref && grp.first == c.ref; });
    if (g == groups.end())
      groups.emplace_back(c.ref, std::vector<const MarkedCue*>{&c});
    else
      g->second.push_back(&c);
  }
  for (const auto& [ref, cues] : groups) {
    NegationInstance inst;
    inst.instance_id = s.instances.size();
    for (const auto* c : cues) inst.cue = inst.cue.united(tokens_inside(c->span));
    if (inst.cue.empty())
      throw ParseError(source, cues.front()->span.line, "negation cue covers no token");
    if (ref) inst.scope = tokens_inside(flat.scopes.at(*ref));
    if (options.remove_cue_from_scope) inst.scope = inst.scope.minus(inst.cue);
    s.instances.push_back(std::move(inst));
  }
  return s;
}

}  // namespace

Corpus parse_bioscope(std::istream& in, const std::string& source, const TokenizerConfig& tok,
                      const BioScopeOptions& options) {
  std::string doc((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto root = xml::parse(doc, source);
  Tokenizer tokenizer(tok);

  std::vector<const xml::Element*> documents;
  if (root->name == "Document")
    documents.push_back(root.get());
  else
    collect(*root, "Document", documents);
  if (documents.empty()) documents.push_back(root.get());

  Corpus corpus;
  corpus.name = source;
  for (std::size_t d = 0; d < documents.size(); ++d) {
    std::vector<const xml::Element*> ids;
    collect(*documents[d], "DocID", ids);
    std::string doc_id = ids.empty() ? "" : trimmed(ids.front()->text());
    if (doc_id.empty()) doc_id = "doc" + std::to_string(d);
    std::vector<const xml::Element*> sentences;
    collect(*documents[d], "sentence", sentences);
    for (std::size_t i = 0; i < sentences.size(); ++i)
      corpus.sentences.push_back(build(*sentences[i], doc_id, i, tokenizer, options, source));
  }
  return corpus;
}

}  // namespace negeval
