#include "negeval/depgraph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <set>

#include "negeval/error.hpp"

namespace negeval {

std::string to_string(EdgeLabel label) {
  switch (label) {
    case EdgeLabel::Cue:
      return "CUE";
    case EdgeLabel::Scope:
      return "S";
    case EdgeLabel::Event:
      return "E";
    case EdgeLabel::MultiwordCue:
      return "MWC";
  }
  return "?";
}

EdgeLabel edge_label_from_string(const std::string& s) {
  if (s == "CUE") return EdgeLabel::Cue;
  if (s == "S") return EdgeLabel::Scope;
  if (s == "E") return EdgeLabel::Event;
  if (s == "MWC") return EdgeLabel::MultiwordCue;
  throw GraphError("unknown edge label '" + s + "'");
}

std::string to_string(EncodingKind kind) { return kind == EncodingKind::Direct ? "direct" : "nested"; }

EncodingKind encoding_kind_from_string(const std::string& s) {
  if (s == "direct") return EncodingKind::Direct;
  if (s == "nested") return EncodingKind::Nested;
  throw UsageError("unknown encoding '" + s + "' (expected direct or nested)");
}

void NegDepGraph::add(std::size_t head, std::size_t dependent, EdgeLabel label) {
  DepEdge e{head, dependent, label};
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) edges.insert(it, e);
}

std::size_t NegDepGraph::count(EdgeLabel label) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [label](const DepEdge& e) { return e.label == label; }));
}

std::vector<DepEdge> NegDepGraph::incoming(std::size_t node) const {
  std::vector<DepEdge> out;
  for (const auto& e : edges)
    if (e.dependent == node) out.push_back(e);
  return out;
}

void NegDepGraph::check() const {
  std::set<std::size_t> cue_nodes;
  for (const auto& e : edges) {
    if (e.dependent == kRootNode || e.dependent > token_count || e.head > token_count)
      throw GraphError("edge " + std::to_string(e.head) + " -> " + std::to_string(e.dependent) +
                       " outside a " + std::to_string(token_count) + "-token graph");
    if ((e.label == EdgeLabel::Cue) != (e.head == kRootNode))
      throw GraphError("node " + std::to_string(e.dependent) + ": " + to_string(e.label) +
                       " edge from " + (e.head == kRootNode ? "the root" : "a token"));
    if (e.label == EdgeLabel::Cue) cue_nodes.insert(e.dependent);
  }
  for (const auto& e : edges)
    if (e.label != EdgeLabel::Cue && !cue_nodes.count(e.head))
      throw GraphError(to_string(e.label) + " edge " + std::to_string(e.head) + " -> " +
                       std::to_string(e.dependent) + " from a head that is not a cue");
}

namespace {

using TokenSet = std::set<std::size_t>;

struct Flat {
  std::size_t instance_id = 0;
  TokenSet cue, scope, event;
  std::size_t rep = 0;
};

TokenSet promote(const ElementSet& set, bool& lossy) {
  TokenSet out;
  for (const auto& e : set) {
    lossy = lossy || !e.is_whole_token();
    out.insert(e.token());
  }
  return out;
}

bool subset(const TokenSet& a, const TokenSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool intersects(const TokenSet& a, const TokenSet& b) {
  for (auto t : a)
    if (b.count(t)) return true;
  return false;
}

TokenSet united(const TokenSet& a, const TokenSet& b) {
  TokenSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

void diag(std::vector<Diagnostic>* out, const Sentence& s, std::optional<std::size_t> inst,
          std::string code, std::string msg) {
  if (out)
    out->push_back(Diagnostic{Severity::Warning, std::move(code), s.doc_id, s.sent_index, inst,
                              std::move(msg)});
}

}  // namespace

NegDepGraph encode(const Sentence& sentence, EncodingKind kind, std::vector<Diagnostic>* diagnostics) {
  NegDepGraph g;
  g.token_count = sentence.tokens.size();

  std::vector<Flat> flat;
  std::map<std::size_t, std::size_t> rep_owner;
  for (const auto& inst : sentence.instances) {
    if (inst.cue.empty()) {
      diag(diagnostics, sentence, inst.instance_id, "empty-cue", "instance without cue not encoded");
      continue;
    }
    bool lossy = false;
    Flat f;
    f.instance_id = inst.instance_id;
    f.cue = promote(inst.cue, lossy);
    f.scope = promote(inst.scope, lossy);
    f.event = promote(inst.event, lossy);
    f.rep = *f.cue.begin();
    if (lossy)
      diag(diagnostics, sentence, inst.instance_id, "affix-promoted",
           "sub-token elements encoded as their whole token");
    for (const auto* set : {&f.cue, &f.scope, &f.event})
      for (auto t : *set)
        if (t >= g.token_count)
          throw GraphError("instance " + std::to_string(inst.instance_id) + " references token " +
                           std::to_string(t) + " outside the sentence");
    if (auto [it, fresh] = rep_owner.emplace(f.rep, inst.instance_id); !fresh)
      throw GraphError("instances " + std::to_string(it->second) + " and " +
                       std::to_string(inst.instance_id) + " of " + sentence.doc_id + ":" +
                       std::to_string(sentence.sent_index) + " share cue token " +
                       std::to_string(f.rep));
    flat.push_back(std::move(f));
  }

  for (const auto& f : flat) {
    g.add(kRootNode, node_of(f.rep), EdgeLabel::Cue);
    for (auto t : f.cue)
      if (t != f.rep) g.add(node_of(f.rep), node_of(t), EdgeLabel::MultiwordCue);
    for (auto t : f.event) g.add(node_of(f.rep), node_of(t), EdgeLabel::Event);
  }

  if (kind == EncodingKind::Direct) {
    for (const auto& f : flat)
      for (auto t : f.scope) g.add(node_of(f.rep), node_of(t), EdgeLabel::Scope);
    return g;
  }

  const std::size_t n = flat.size();
  std::vector<TokenSet> covered(n);  // cue ∪ scope
  for (std::size_t i = 0; i < n; ++i) covered[i] = united(flat[i].cue, flat[i].scope);
  // nested[i][j]: instance i sits inside the scope of instance j.
  std::vector<std::vector<bool>> nested(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && subset(covered[i], flat[j].scope) && !subset(covered[j], flat[i].scope))
        nested[i][j] = true;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (nested[i][j] || nested[j][i]) continue;
      if (intersects(flat[i].scope, covered[j]) || intersects(flat[j].scope, covered[i])) {
        std::string msg = "instances " + std::to_string(flat[i].instance_id) + " and " +
                          std::to_string(flat[j].instance_id) +
                          " overlap without nesting; shared tokens attached directly";
        if (flat[i].scope.count(flat[j].rep) || flat[j].scope.count(flat[i].rep))
          msg += " (a cue inside the other scope reads back as nesting)";
        diag(diagnostics, sentence, flat[j].instance_id, "non-laminar", msg);
      }
    }

  for (std::size_t j = 0; j < n; ++j) {
    TokenSet inner;
    for (std::size_t i = 0; i < n; ++i) {
      if (!nested[i][j]) continue;
      inner.insert(covered[i].begin(), covered[i].end());
      bool direct_child = true;
      for (std::size_t k = 0; k < n && direct_child; ++k)
        if (nested[i][k] && nested[k][j]) direct_child = false;
      if (direct_child) g.add(node_of(flat[j].rep), node_of(flat[i].rep), EdgeLabel::Scope);
    }
    for (auto t : flat[j].scope)
      if (!inner.count(t)) g.add(node_of(flat[j].rep), node_of(t), EdgeLabel::Scope);
  }
  return g;
}

std::vector<NegationInstance> decode(const NegDepGraph& graph, EncodingKind kind) {
  graph.check();
  std::map<std::size_t, Flat> by_rep;  // keyed by node
  for (const auto& e : graph.edges)
    if (e.label == EdgeLabel::Cue) {
      auto& f = by_rep[e.dependent];
      f.rep = e.dependent;
      f.cue.insert(e.dependent);
    }
  for (const auto& e : graph.edges) {
    if (e.label == EdgeLabel::Cue) continue;
    auto& f = by_rep.at(e.head);
    if (e.label == EdgeLabel::MultiwordCue)
      f.cue.insert(e.dependent);
    else if (e.label == EdgeLabel::Scope)
      f.scope.insert(e.dependent);
    else
      f.event.insert(e.dependent);
  }

  std::map<std::size_t, TokenSet> expanded;
  if (kind == EncodingKind::Nested) {
    std::set<std::size_t> in_progress;
    std::function<const TokenSet&(std::size_t)> expand = [&](std::size_t rep) -> const TokenSet& {
      if (auto it = expanded.find(rep); it != expanded.end()) return it->second;
      if (!in_progress.insert(rep).second)
        throw GraphError("cyclic nesting through cue node " + std::to_string(rep));
      TokenSet scope;
      for (auto d : by_rep.at(rep).scope) {
        scope.insert(d);
        if (d != rep && by_rep.count(d)) {
          const auto& inner_cue = by_rep.at(d).cue;
          scope.insert(inner_cue.begin(), inner_cue.end());
          const auto& inner = expand(d);
          scope.insert(inner.begin(), inner.end());
        }
      }
      in_progress.erase(rep);
      return expanded.emplace(rep, std::move(scope)).first->second;
    };
    for (const auto& [rep, f] : by_rep) expand(rep);
  }

  std::vector<NegationInstance> out;
  for (const auto& [rep, f] : by_rep) {
    auto to_elements = [](const TokenSet& nodes) {
      ElementSet s;
      for (auto node : nodes) s.insert(AnnotationElement(node - 1));
      return s;
    };
    NegationInstance inst;
    inst.instance_id = out.size();
    inst.cue = to_elements(f.cue);
    inst.scope = to_elements(kind == EncodingKind::Nested ? expanded.at(rep) : f.scope);
    inst.event = to_elements(f.event);
    out.push_back(std::move(inst));
  }
  return out;
}

void write_dep_graphs(const Corpus& corpus, EncodingKind kind, std::ostream& out,
                      std::vector<Diagnostic>* diagnostics) {
  for (const auto& s : corpus.sentences) {
    const auto g = encode(s, kind, diagnostics);
    out << "# doc_id = " << s.doc_id << '\n' << "# sent_index = " << s.sent_index << '\n';
    for (const auto& tok : s.tokens) {
      out << node_of(tok.index) << '\t' << tok.surface << '\t';
      const auto heads = g.incoming(node_of(tok.index));
      if (heads.empty()) out << '_';
      for (std::size_t i = 0; i < heads.size(); ++i)
        out << (i ? "|" : "") << heads[i].head << ':' << to_string(heads[i].label);
      out << '\n';
    }
    out << '\n';
  }
}

namespace {

std::size_t parse_number(std::string_view text, const std::string& source, std::size_t line,
                         const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(source, line, std::string("invalid ") + what + " '" + std::string(text) + "'");
  return v;
}

}  // namespace

Corpus read_dep_graphs(std::istream& in, const std::string& source, EncodingKind kind,
                       const PunctuationPolicy& punct) {
  Corpus corpus;
  corpus.name = source;
  Sentence current;
  NegDepGraph graph;
  bool has_doc = false, has_index = false, open = false;
  std::size_t block_line = 0;

  auto flush = [&] {
    if (!open) return;
    if (!has_doc) current.doc_id = source;
    if (!has_index) current.sent_index = corpus.sentences.size();
    graph.token_count = current.tokens.size();
    try {
      current.instances = decode(graph, kind);
    } catch (const GraphError& e) {
      throw ParseError(source, block_line, e.what());
    }
    corpus.sentences.push_back(std::move(current));
    current = Sentence{};
    graph = NegDepGraph{};
    has_doc = has_index = open = false;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (!open) block_line = line_no;
    open = true;
    if (line[0] == '#') {
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto key_begin = line.find_first_not_of(" #");
      auto key = line.substr(key_begin, line.find_last_not_of(' ', eq - 1) - key_begin + 1);
      auto value = line.substr(std::min(line.size(), line.find_first_not_of(' ', eq + 1)));
      if (key == "doc_id") {
        current.doc_id = value;
        has_doc = true;
      } else if (key == "sent_index") {
        current.sent_index = parse_number(value, source, line_no, "sentence index");
        has_index = true;
      }
      continue;
    }
    auto t1 = line.find('\t');
    auto t2 = t1 == std::string::npos ? std::string::npos : line.find('\t', t1 + 1);
    if (t2 == std::string::npos || line.find('\t', t2 + 1) != std::string::npos)
      throw ParseError(source, line_no, "expected 3 tab-separated columns");
    auto node = parse_number(std::string_view(line).substr(0, t1), source, line_no, "token index");
    if (node != current.tokens.size() + 1)
      throw ParseError(source, line_no,
                       "token index " + std::to_string(node) + ", expected " +
                           std::to_string(current.tokens.size() + 1));
    Token tok;
    tok.index = node - 1;
    tok.surface = line.substr(t1 + 1, t2 - t1 - 1);
    if (tok.surface.empty()) throw ParseError(source, line_no, "empty token surface");
    tok.is_punct = punct.is_punct(tok.surface, std::nullopt);
    current.tokens.push_back(std::move(tok));
    std::string_view heads = std::string_view(line).substr(t2 + 1);
    if (heads == "_") continue;
    std::size_t start = 0;
    for (;;) {
      auto bar = heads.find('|', start);
      auto item = heads.substr(start, bar == std::string_view::npos ? bar : bar - start);
      auto colon = item.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(source, line_no, "head entry '" + std::string(item) + "' lacks ':'");
      auto head = parse_number(item.substr(0, colon), source, line_no, "head");
      try {
        graph.add(head, node, edge_label_from_string(std::string(item.substr(colon + 1))));
      } catch (const GraphError& e) {
        throw ParseError(source, line_no, e.what());
      }
      if (bar == std::string_view::npos) break;
      start = bar + 1;
    }
  }
  flush();
  return corpus;
}

}  // namespace negeval
