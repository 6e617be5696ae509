#include "negeval/datatools.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "negeval/error.hpp"
#include "negeval/metrics.hpp"
#include "negeval/sem_conll.hpp"

namespace negeval {

std::string to_string(SplitName name) {
  switch (name) {
    case SplitName::Train:
      return "train";
    case SplitName::Dev:
      return "dev";
    case SplitName::Test:
      return "test";
  }
  return "?";
}

SplitName split_name_from_string(const std::string& s) {
  if (s == "train") return SplitName::Train;
  if (s == "dev") return SplitName::Dev;
  if (s == "test") return SplitName::Test;
  throw UsageError("unknown split '" + s + "' (expected train, dev or test)");
}

std::array<unsigned, 3> SplitSpec::parse_ratios(const std::string& text) {
  std::array<unsigned, 3> out{};
  std::size_t k = 0, start = 0;
  for (;;) {
    auto sep = text.find_first_of("/,", start);
    auto part = text.substr(start, sep == std::string::npos ? sep : sep - start);
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (k == 3 || part.empty() || ec != std::errc() || ptr != part.data() + part.size())
      throw UsageError("invalid ratios '" + text + "' (expected e.g. 80/10/10)");
    out[k++] = v;
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  if (k != 3 || out[0] + out[1] + out[2] != 100)
    throw UsageError("ratios '" + text + "' must be three numbers summing to 100");
  return out;
}

namespace {

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

}  // namespace

std::map<std::string, SplitName> parse_assignments(std::istream& in, const std::string& source) {
  std::map<std::string, SplitName> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(source, line_no, "expected doc_id<TAB>split");
    auto doc = strip(line.substr(0, tab));
    auto split = strip(line.substr(tab + 1));
    SplitName name;
    try {
      name = split_name_from_string(split);
    } catch (const UsageError& e) {
      throw ParseError(source, line_no, e.what());
    }
    if (!out.emplace(doc, name).second)
      throw ParseError(source, line_no, "document " + doc + " assigned twice");
  }
  return out;
}

void write_assignments(const std::map<std::string, SplitName>& assignments, std::ostream& out) {
  for (const auto& [doc, split] : assignments) out << doc << '\t' << to_string(split) << '\n';
}

const Corpus& CorpusSplit::part(SplitName name) const {
  return name == SplitName::Train ? train : name == SplitName::Dev ? dev : test;
}

std::uint64_t split_hash(std::uint64_t seed, const std::string& doc_id) {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](unsigned char byte) {
    h ^= byte;
    h *= 1099511628211ULL;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  for (char c : doc_id) mix(static_cast<unsigned char>(c));
  return h;
}

CorpusSplit split_corpus(const Corpus& corpus, const SplitSpec& spec) {
  if (spec.ratios[0] + spec.ratios[1] + spec.ratios[2] != 100)
    throw UsageError("split ratios must sum to 100");
  std::map<std::string, std::size_t> doc_sentences;
  std::vector<std::string> docs;  // first-appearance order
  for (const auto& s : corpus.sentences)
    if (doc_sentences[s.doc_id]++ == 0) docs.push_back(s.doc_id);

  CorpusSplit out;
  if (spec.assignments) {
    for (const auto& [doc, split] : *spec.assignments)
      if (!doc_sentences.count(doc))
        throw UsageError("assignment names unknown document '" + doc + "'");
    for (const auto& doc : docs) {
      auto it = spec.assignments->find(doc);
      if (it == spec.assignments->end())
        throw UsageError("document '" + doc + "' has no split assignment");
      out.assignments.emplace(doc, it->second);
    }
  } else {
    std::vector<std::pair<std::uint64_t, std::string>> order;
    for (const auto& doc : docs) order.emplace_back(split_hash(spec.seed, doc), doc);
    std::sort(order.begin(), order.end());
    const auto total = static_cast<double>(corpus.sentences.size());
    std::array<double, 3> filled{};
    for (const auto& [hash, doc] : order) {
      std::size_t best = 0;
      double best_deficit = -1e300;
      for (std::size_t k = 0; k < 3; ++k) {
        const double deficit = spec.ratios[k] / 100.0 * total - filled[k];
        if (deficit > best_deficit) {
          best = k;
          best_deficit = deficit;
        }
      }
      filled[best] += static_cast<double>(doc_sentences[doc]);
      out.assignments.emplace(doc, static_cast<SplitName>(best));
    }
  }

  out.train.name = corpus.name + " [train]";
  out.dev.name = corpus.name + " [dev]";
  out.test.name = corpus.name + " [test]";
  for (const auto& s : corpus.sentences) {
    switch (out.assignments.at(s.doc_id)) {
      case SplitName::Train:
        out.train.sentences.push_back(s);
        break;
      case SplitName::Dev:
        out.dev.sentences.push_back(s);
        break;
      case SplitName::Test:
        out.test.sentences.push_back(s);
        break;
    }
  }
  return out;
}

double CorpusStats::negation_sentence_ratio() const {
  return sentences == 0 ? 0.0
                        : static_cast<double>(negation_sentences) / static_cast<double>(sentences);
}

CorpusStats corpus_stats(const Corpus& corpus, bool strip_punct) {
  const Corpus stripped = strip_punct ? strip_punctuation(corpus) : Corpus{};
  const Corpus& c = strip_punct ? stripped : corpus;
  CorpusStats st;
  st.sentences = c.sentences.size();
  for (const auto& s : c.sentences) {
    if (!s.instances.empty()) ++st.negation_sentences;
    st.instances += s.instances.size();
    for (const auto& inst : s.instances) ++st.scope_lengths[inst.scope.size()];
  }
  return st;
}

std::string stats_to_tsv(const CorpusStats& stats, int decimals) {
  std::ostringstream out;
  out << "sentences\t" << stats.sentences << '\n'
      << "negation_sentences\t" << stats.negation_sentences << '\n'
      << "negation_sentence_percent\t" << std::fixed << std::setprecision(decimals)
      << round_percent(stats.negation_sentence_ratio(), decimals) << '\n'
      << "instances\t" << stats.instances << '\n';
  for (const auto& [length, count] : stats.scope_lengths)
    out << "scope_length." << length << '\t' << count << '\n';
  return out.str();
}

std::string PatchTarget::to_string() const {
  return doc_id + ":" + std::to_string(sent_index) + "#" + std::to_string(instance_id);
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab == std::string::npos ? tab : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::size_t parse_size(const std::string& text, const std::string& source, std::size_t line,
                       const char* what) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError(source, line, std::string("invalid ") + what + " '" + text + "'");
  return v;
}

struct PendingPatch {
  ReannotationPatch patch;
  std::size_t line = 0;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;
};

ReannotationPatch finish(PendingPatch& p, const std::string& source) {
  if (p.rows.empty()) throw ParseError(source, p.line, "patch block without token rows");
  const auto cells = p.rows.front().size() - 2;
  if (cells % 3 != 0)
    throw ParseError(source, p.row_lines.front(),
                     "annotation cells must come in (cue, scope, event) triples");
  const auto k = cells / 3;
  auto& patch = p.patch;
  patch.replacement.resize(k);
  for (std::size_t i = 0; i < k; ++i) patch.replacement[i].instance_id = i;
  for (std::size_t t = 0; t < p.rows.size(); ++t) {
    const auto& row = p.rows[t];
    const auto line = p.row_lines[t];
    if (row.size() - 2 != cells)
      throw ParseError(source, line, "cell count differs from the first row of the block");
    if (parse_size(row[0], source, line, "token number") != t)
      throw ParseError(source, line, "token number " + row[0] + ", expected " + std::to_string(t));
    Token tok;
    tok.index = t;
    tok.surface = row[1];
    for (std::size_t i = 0; i < k; ++i) {
      auto& inst = patch.replacement[i];
      const auto& c = row[2 + 3 * i];
      const auto& s = row[3 + 3 * i];
      const auto& e = row[4 + 3 * i];
      if (c != "_") inst.cue.insert(parse_annotation_cell(c, tok, source, line, "cue"));
      if (s != "_") inst.scope.insert(parse_annotation_cell(s, tok, source, line, "scope"));
      if (e != "_") inst.event.insert(parse_annotation_cell(e, tok, source, line, "event"));
    }
    patch.surfaces.push_back(row[1]);
  }
  for (const auto& inst : patch.replacement)
    if (inst.cue.empty())
      throw ParseError(source, p.line, "replacement instance without cue in patch for " +
                                           patch.target.to_string());
  return std::move(patch);
}

}  // namespace

std::vector<ReannotationPatch> parse_patches(std::istream& in, const std::string& source) {
  std::vector<ReannotationPatch> out;
  std::optional<PendingPatch> pending;
  std::string line;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (pending) out.push_back(finish(*pending, source));
    pending.reset();
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (strip(line).empty()) {
      flush();
      continue;
    }
    if (!pending && line[0] == '#') continue;
    if (line[0] == '@') {
      flush();
      std::istringstream head(line.substr(1));
      std::string doc, sent, inst, extra;
      if (!(head >> doc >> sent >> inst) || (head >> extra))
        throw ParseError(source, line_no, "expected '@ doc_id sent_index instance_id'");
      pending.emplace();
      pending->line = line_no;
      pending->patch.target = PatchTarget{doc, parse_size(sent, source, line_no, "sentence index"),
                                          parse_size(inst, source, line_no, "instance id")};
      continue;
    }
    if (!pending) throw ParseError(source, line_no, "token row outside a patch block");
    auto row = split_tabs(line);
    if (row.size() < 2) throw ParseError(source, line_no, "expected token_no<TAB>surface");
    pending->rows.push_back(std::move(row));
    pending->row_lines.push_back(line_no);
  }
  flush();
  return out;
}

void write_patches(const std::vector<ReannotationPatch>& patches, std::ostream& out) {
  for (std::size_t p = 0; p < patches.size(); ++p) {
    const auto& patch = patches[p];
    if (p) out << '\n';
    out << "@ " << patch.target.doc_id << ' ' << patch.target.sent_index << ' '
        << patch.target.instance_id << '\n';
    for (std::size_t t = 0; t < patch.surfaces.size(); ++t) {
      Token tok;
      tok.index = t;
      tok.surface = patch.surfaces[t];
      out << t << '\t' << tok.surface;
      for (const auto& inst : patch.replacement)
        out << '\t' << annotation_cell(inst.cue, tok) << '\t' << annotation_cell(inst.scope, tok)
            << '\t' << annotation_cell(inst.event, tok);
      out << '\n';
    }
  }
}

Corpus apply_patches(const Corpus& corpus, const std::vector<ReannotationPatch>& patches) {
  std::map<PatchTarget, const ReannotationPatch*> by_target;
  for (const auto& p : patches)
    if (!by_target.emplace(p.target, &p).second)
      throw PatchError("more than one patch targets " + p.target.to_string());

  Corpus out = corpus;
  std::size_t applied = 0;
  for (auto& s : out.sentences) {
    auto first = by_target.lower_bound(PatchTarget{s.doc_id, s.sent_index, 0});
    if (first == by_target.end() || first->first.doc_id != s.doc_id ||
        first->first.sent_index != s.sent_index)
      continue;
    std::vector<NegationInstance> rebuilt;
    for (const auto& inst : s.instances) {
      auto it = by_target.find(PatchTarget{s.doc_id, s.sent_index, inst.instance_id});
      if (it == by_target.end()) {
        rebuilt.push_back(inst);
        continue;
      }
      const auto& patch = *it->second;
      if (patch.surfaces.size() != s.tokens.size())
        throw PatchError("patch for " + patch.target.to_string() + " has " +
                         std::to_string(patch.surfaces.size()) + " tokens, sentence has " +
                         std::to_string(s.tokens.size()));
      for (std::size_t t = 0; t < s.tokens.size(); ++t)
        if (patch.surfaces[t] != s.tokens[t].surface)
          throw PatchError("patch for " + patch.target.to_string() + ": token " +
                           std::to_string(t) + " is '" + patch.surfaces[t] + "', sentence has '" +
                           s.tokens[t].surface + "'");
      rebuilt.insert(rebuilt.end(), patch.replacement.begin(), patch.replacement.end());
      ++applied;
    }
    for (std::size_t i = 0; i < rebuilt.size(); ++i) rebuilt[i].instance_id = i;
    s.instances = std::move(rebuilt);
  }
  if (applied != by_target.size()) {
    // Name the first target that matched nothing.
    for (const auto& [target, patch] : by_target) {
      bool found = false;
      for (const auto& s : corpus.sentences)
        if (s.doc_id == target.doc_id && s.sent_index == target.sent_index)
          for (const auto& inst : s.instances) found = found || inst.instance_id == target.instance_id;
      if (!found) throw PatchError("patch target " + target.to_string() + " not found");
    }
    throw PatchError("a patch target matches more than one instance");
  }
  return out;
}

namespace {

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(c < 0x80 ? std::tolower(c) : c);
  });
  return s;
}

}  // namespace

std::vector<ReannotationPatch> detect_coordination_cues(const Corpus& corpus,
                                                        const std::set<std::string>& lexicon) {
  std::set<std::string> words;
  for (const auto& w : lexicon) words.insert(lowercase(w));
  std::vector<ReannotationPatch> out;
  for (const auto& s : corpus.sentences)
    for (const auto& inst : s.instances) {
      const auto tokens = inst.cue.tokens();
      if (tokens.size() < 2) continue;
      bool continuous = true;
      for (std::size_t i = 1; i < tokens.size(); ++i) continuous = continuous && tokens[i] == tokens[i - 1] + 1;
      if (continuous) continue;
      bool in_lexicon = true;
      for (const auto& e : inst.cue) {
        const auto& text = e.is_whole_token() ? s.tokens.at(e.token()).surface : e.text();
        in_lexicon = in_lexicon && words.count(lowercase(text));
      }
      if (!in_lexicon) continue;
      ReannotationPatch patch;
      patch.target = PatchTarget{s.doc_id, s.sent_index, inst.instance_id};
      for (const auto& tok : s.tokens) patch.surfaces.push_back(tok.surface);
      for (const auto& e : inst.cue) {
        NegationInstance draft;
        draft.instance_id = patch.replacement.size();
        draft.cue.insert(e);
        draft.scope = inst.scope;
        draft.event = inst.event;
        patch.replacement.push_back(std::move(draft));
      }
      out.push_back(std::move(patch));
    }
  return out;
}

}  // namespace negeval
