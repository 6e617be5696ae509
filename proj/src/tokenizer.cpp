#include "negeval/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "negeval/error.hpp"

namespace negeval {

TokenizerConfig TokenizerConfig::defaults() {
  TokenizerConfig c;
  c.url_patterns = {R"((?:https?|ftp)://\S+)", R"(www\.\S+)"};
  c.split_chars = {",", ";", "!", "?", "(", ")", "[", "]", "{", "}", "\"",
                   "\xE2\x80\x9C", "\xE2\x80\x9D", "\xC2\xAB", "\xC2\xBB"};
  c.edge_chars = {".", ":", "'", "`", "\xE2\x80\x98", "\xE2\x80\x99"};
  c.suffixes = {"n't", "'s", "'re", "'ve", "'ll", "'d", "'m"};
  c.abbreviations = {"e.g.", "i.e.", "al.", "vs.", "fig.", "figs.", "dr.", "mr.", "mrs.",
                     "ms.", "ca.", "approx.", "resp.", "cf.", "etc.", "no.", "st."};
  return c;
}

TokenizerConfig TokenizerConfig::parse(std::istream& in, const std::string& source) {
  TokenizerConfig c;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line.substr(first));
    std::string kind;
    fields >> kind;
    if (kind == "url") {
      std::string pattern;
      std::getline(fields >> std::ws, pattern);
      if (pattern.empty()) throw ParseError(source, line_no, "url rule without a pattern");
      try {
        std::regex check(pattern);
      } catch (const std::regex_error& e) {
        throw ParseError(source, line_no, std::string("invalid url regex: ") + e.what());
      }
      c.url_patterns.push_back(pattern);
      continue;
    }
    std::vector<std::string>* target = nullptr;
    if (kind == "split")
      target = &c.split_chars;
    else if (kind == "edge")
      target = &c.edge_chars;
    else if (kind == "suffix")
      target = &c.suffixes;
    else if (kind == "abbrev")
      target = &c.abbreviations;
    else
      throw ParseError(source, line_no, "unknown tokenizer rule '" + kind + "'");
    std::string value;
    while (fields >> value) target->push_back(value);
  }
  return c;
}

TokenizerConfig TokenizerConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open tokenizer config " + path);
  return parse(in, path);
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) ==
                  std::tolower(static_cast<unsigned char>(y));
         });
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Length of the entry of `set` that starts at text[pos], 0 if none.
std::size_t match_at(const std::vector<std::string>& set, std::string_view text,
                     std::size_t pos) {
  for (const auto& s : set)
    if (!s.empty() && text.substr(pos, s.size()) == s) return s.size();
  return 0;
}

// Length of the entry of `set` that ends at text[end - 1], 0 if none.
std::size_t match_before(const std::vector<std::string>& set, std::string_view text,
                         std::size_t begin, std::size_t end) {
  for (const auto& s : set)
    if (!s.empty() && end - begin >= s.size() && text.substr(end - s.size(), s.size()) == s)
      return s.size();
  return 0;
}

bool in_list(const std::vector<std::string>& list, std::string_view word) {
  return std::any_of(list.begin(), list.end(),
                     [word](const std::string& w) { return iequals(w, word); });
}

}  // namespace

Tokenizer::Tokenizer(TokenizerConfig config) : config_(std::move(config)) {
  for (const auto& p : config_.url_patterns) urls_.emplace_back(p);
}

void Tokenizer::split_chunk(std::string_view text, std::size_t begin, std::size_t end,
                            std::vector<TextToken>& out) const {
  auto emit = [&](std::size_t b, std::size_t e) {
    out.push_back(TextToken{b, e, std::string(text.substr(b, e - b))});
  };
  auto boundary_len = [&](std::size_t p) {
    if (auto n = match_at(config_.split_chars, text, p)) return n;
    return match_at(config_.edge_chars, text, p);
  };

  std::size_t pos = begin;
  while (pos < end) {
    std::string_view rest = text.substr(pos, end - pos);

    std::size_t url_len = 0;
    for (const auto& re : urls_) {
      std::match_results<std::string_view::const_iterator> m;
      if (std::regex_search(rest.begin(), rest.end(), m, re,
                            std::regex_constants::match_continuous))
        url_len = std::max(url_len, static_cast<std::size_t>(m.length(0)));
    }
    if (url_len > 0) {
      std::size_t url_end = pos + url_len;
      while (url_end > pos + 1) {
        auto n = match_before(config_.edge_chars, text, pos, url_end);
        if (n == 0) n = match_before(config_.split_chars, text, pos, url_end);
        if (n == 0) break;
        url_end -= n;
      }
      emit(pos, url_end);
      pos = url_end;
      continue;
    }

    // Word: up to the next split character (a comma between digits stays).
    std::size_t word_end = pos;
    while (word_end < end) {
      auto n = match_at(config_.split_chars, text, word_end);
      if (n > 0) {
        bool digit_comma = text[word_end] == ',' && word_end > pos && word_end + 1 < end &&
                           is_digit(text[word_end - 1]) && is_digit(text[word_end + 1]);
        if (!digit_comma) break;
      }
      ++word_end;
    }
    std::string_view word = text.substr(pos, word_end - pos);

    if (!word.empty() && (in_list(config_.abbreviations, word) || in_list(config_.suffixes, word))) {
      emit(pos, word_end);
      pos = word_end;
      continue;
    }

    // Leading boundary character (runs of the same one stay together: "...", "``").
    if (auto n = boundary_len(pos)) {
      std::string_view unit = text.substr(pos, n);
      std::size_t run_end = pos + n;
      while (run_end + n <= end && text.substr(run_end, n) == unit) run_end += n;
      emit(pos, run_end);
      pos = run_end;
      continue;
    }

    // Trailing edge characters, unless what remains is an abbreviation.
    std::size_t core_end = word_end;
    std::vector<std::pair<std::size_t, std::size_t>> trailing;
    while (core_end > pos) {
      if (in_list(config_.abbreviations, text.substr(pos, core_end - pos))) break;
      auto n = match_before(config_.edge_chars, text, pos, core_end);
      if (n == 0 || n == core_end - pos) break;
      std::size_t run_begin = core_end - n;
      std::string_view unit = text.substr(run_begin, n);
      while (run_begin - pos > n && text.substr(run_begin - n, n) == unit) run_begin -= n;
      if (run_begin == pos) break;
      trailing.emplace_back(run_begin, core_end);
      core_end = run_begin;
    }

    std::size_t suffix_len = 0;
    for (const auto& s : config_.suffixes)
      if (core_end - pos > s.size() && iequals(text.substr(core_end - s.size(), s.size()), s))
        suffix_len = std::max(suffix_len, s.size());
    if (suffix_len > 0) {
      emit(pos, core_end - suffix_len);
      emit(core_end - suffix_len, core_end);
    } else {
      emit(pos, core_end);
    }
    for (auto it = trailing.rbegin(); it != trailing.rend(); ++it) emit(it->first, it->second);
    pos = word_end;
  }
}

std::vector<TextToken> Tokenizer::operator()(std::string_view text) const {
  std::vector<TextToken> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (start < i) split_chunk(text, start, i, out);
  }
  return out;
}

std::vector<TextToken> tokenize(std::string_view text, const TokenizerConfig& config) {
  return Tokenizer(config)(text);
}

}  // namespace negeval
