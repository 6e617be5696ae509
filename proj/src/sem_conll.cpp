#include "negeval/sem_conll.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "negeval/error.hpp"

namespace negeval {

namespace {

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  if (line.find('\t') != std::string_view::npos) {
    std::size_t start = 0;
    for (;;) {
      auto tab = line.find('\t', start);
      out.emplace_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    // Tolerate trailing tabs.
    while (!out.empty() && out.back().empty()) out.pop_back();
    return out;
  }
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ')) ++i;
    auto start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (start < i) out.emplace_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_index(const std::string& field, const char* what, const std::string& source,
                        std::size_t line_no) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw ParseError(source, line_no, std::string("invalid ") + what + " '" + field + "'");
  return v;
}

std::optional<std::string> optional_field(const std::string& f) {
  if (f == "_") return std::nullopt;
  return f;
}

// Cell text -> element of token `index`. Whole surface gives a whole-token
// element; a strict substring a subspan (prefix first, then suffix, then the
// first occurrence).
AnnotationElement cell_element(const std::string& cell, const Token& token,
                               const std::string& source, std::size_t line_no,
                               const char* role) {
  const auto& surface = token.surface;
  if (cell == surface) return AnnotationElement(token.index);
  std::size_t at = std::string::npos;
  if (surface.size() > cell.size()) {
    if (surface.compare(0, cell.size(), cell) == 0)
      at = 0;
    else if (surface.compare(surface.size() - cell.size(), cell.size(), cell) == 0)
      at = surface.size() - cell.size();
    else
      at = surface.find(cell);
  }
  if (at == std::string::npos)
    throw ParseError(source, line_no,
                     std::string(role) + " cell '" + cell + "' is not part of token '" +
                         surface + "'");
  return AnnotationElement::part(token.index, surface, at, at + cell.size());
}

struct PendingSentence {
  std::vector<SemConllRecord> records;
  std::vector<std::size_t> lines;
};

Sentence build_sentence(const PendingSentence& p, const std::string& source,
                        const PunctuationPolicy& punct) {
  const auto& first = p.records.front();
  Sentence s;
  s.doc_id = first.doc_id;
  s.sent_index = first.sent_no;
  const std::size_t k = first.instance_count();
  const bool free = first.negation_free();
  s.instances.resize(k);
  for (std::size_t i = 0; i < k; ++i) s.instances[i].instance_id = i;

  for (std::size_t t = 0; t < p.records.size(); ++t) {
    const auto& r = p.records[t];
    const auto line = p.lines[t];
    if (r.doc_id != first.doc_id || r.sent_no != first.sent_no)
      throw ParseError(source, line, "document/sentence id changes inside a sentence block");
    if (r.token_no != t)
      throw ParseError(source, line,
                       "token number " + std::to_string(r.token_no) + ", expected " +
                           std::to_string(t));
    if (r.negation_free() != free || r.negation.size() != first.negation.size())
      throw ParseError(source, line,
                       "negation column count differs from the first token of the sentence");
    Token tok;
    tok.index = t;
    tok.surface = r.surface;
    tok.lemma = optional_field(r.lemma);
    tok.pos = optional_field(r.pos);
    tok.syntax = optional_field(r.syntax);
    tok.is_punct = punct.is_punct(tok.surface, tok.pos);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& cue = r.negation[3 * i];
      const auto& scope = r.negation[3 * i + 1];
      const auto& event = r.negation[3 * i + 2];
      auto& inst = s.instances[i];
      if (cue != "_") inst.cue.insert(cell_element(cue, tok, source, line, "cue"));
      if (scope != "_") inst.scope.insert(cell_element(scope, tok, source, line, "scope"));
      if (event != "_") inst.event.insert(cell_element(event, tok, source, line, "event"));
    }
    s.tokens.push_back(std::move(tok));
  }
  return s;
}

}  // namespace

SemConllRecord SemConllRecord::parse(std::string_view line, const std::string& source,
                                     std::size_t line_no) {
  auto f = split_fields(line);
  if (f.size() < 8)
    throw ParseError(source, line_no,
                     "expected at least 8 columns, found " + std::to_string(f.size()));
  SemConllRecord r;
  r.doc_id = f[0];
  r.sent_no = parse_index(f[1], "sentence number", source, line_no);
  r.token_no = parse_index(f[2], "token number", source, line_no);
  r.surface = f[3];
  r.lemma = f[4];
  r.pos = f[5];
  r.syntax = f[6];
  r.negation.assign(f.begin() + 7, f.end());
  bool has_stars = false;
  for (const auto& c : r.negation) has_stars = has_stars || c == "***";
  if (has_stars && r.negation.size() != 1)
    throw ParseError(source, line_no, "'***' mixed with negation instance cells");
  if (!has_stars && r.negation.size() % 3 != 0)
    throw ParseError(source, line_no,
                     "negation cells must come in (cue, scope, event) triples, found " +
                         std::to_string(r.negation.size()));
  return r;
}

Corpus parse_sem_conll(std::istream& in, const std::string& source,
                       const PunctuationPolicy& punct) {
  Corpus corpus;
  corpus.name = source;
  PendingSentence pending;
  std::string line;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (pending.records.empty()) return;
    corpus.sentences.push_back(build_sentence(pending, source, punct));
    pending = {};
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) {
      flush();
      continue;
    }
    pending.records.push_back(SemConllRecord::parse(line, source, line_no));
    pending.lines.push_back(line_no);
  }
  flush();
  return corpus;
}

Corpus read_sem_conll(const std::string& path, const PunctuationPolicy& punct) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  return parse_sem_conll(in, path, punct);
}

namespace {

std::string cell_text(const ElementSet& set, const Token& tok) {
  const AnnotationElement* found = nullptr;
  for (const auto& e : set) {
    if (e.token() != tok.index) continue;
    if (found)
      throw std::logic_error("token " + std::to_string(tok.index) +
                             " has two elements in one annotation set");
    found = &e;
  }
  if (!found) return "_";
  return found->is_whole_token() ? tok.surface : found->text();
}

}  // namespace

void write_sem_conll(const Corpus& corpus, std::ostream& out) {
  for (const auto& s : corpus.sentences) {
    for (const auto& tok : s.tokens) {
      out << s.doc_id << '\t' << s.sent_index << '\t' << tok.index << '\t' << tok.surface
          << '\t' << tok.lemma.value_or("_") << '\t' << tok.pos.value_or("_") << '\t'
          << tok.syntax.value_or("_");
      if (s.instances.empty()) out << "\t***";
      for (const auto& inst : s.instances)
        out << '\t' << cell_text(inst.cue, tok) << '\t' << cell_text(inst.scope, tok) << '\t'
            << cell_text(inst.event, tok);
      out << '\n';
    }
    out << '\n';
  }
}

AnnotationElement parse_annotation_cell(const std::string& cell, const Token& token,
                                        const std::string& source, std::size_t line_no,
                                        const char* role) {
  return cell_element(cell, token, source, line_no, role);
}

std::string annotation_cell(const ElementSet& set, const Token& token) {
  return cell_text(set, token);
}

std::string write_sem_conll(const Corpus& corpus) {
  std::ostringstream out;
  write_sem_conll(corpus, out);
  return out.str();
}

}  // namespace negeval
