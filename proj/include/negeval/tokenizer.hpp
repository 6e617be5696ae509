#ifndef NEGEVAL_TOKENIZER_HPP
#define NEGEVAL_TOKENIZER_HPP

#include <cstddef>
#include <iosfwd>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace negeval {

/// Rules for the untokenized-text tokenizer. Loaded from a plain-text file
/// with one rule per line:
///
///   url <ECMAScript regex>      protected spans, never split
///   split <c> <c> ...           always split off, also inside a word
///   edge <c> <c> ...            split off only at the start/end of a word
///   suffix <s> <s> ...          clitics split from the end of a word (n't, 's)
///   abbrev <w> <w> ...          words kept whole including trailing periods
///
/// Blank lines and lines starting with '#' are ignored. Matching of
/// suffixes and abbreviations is ASCII case-insensitive.
struct TokenizerConfig {
  std::vector<std::string> url_patterns;
  std::vector<std::string> split_chars;
  std::vector<std::string> edge_chars;
  std::vector<std::string> suffixes;
  std::vector<std::string> abbreviations;

  static TokenizerConfig defaults();
  /// Throws ParseError on an unknown rule or an invalid regex.
  static TokenizerConfig parse(std::istream& in, const std::string& source);
  static TokenizerConfig load(const std::string& path);
};

struct TextToken {
  std::size_t begin = 0;  // byte offsets into the input, half-open
  std::size_t end = 0;
  std::string text;
};

/// Compiled form of a TokenizerConfig; reuse it across many sentences.
class Tokenizer {
 public:
  explicit Tokenizer(TokenizerConfig config);

  std::vector<TextToken> operator()(std::string_view text) const;

 private:
  void split_chunk(std::string_view text, std::size_t begin, std::size_t end,
                   std::vector<TextToken>& out) const;

  TokenizerConfig config_;
  std::vector<std::regex> urls_;
};

/// Deterministic split of `text`; the tokens partition its non-whitespace bytes.
std::vector<TextToken> tokenize(std::string_view text, const TokenizerConfig& config);

}  // namespace negeval

#endif  // NEGEVAL_TOKENIZER_HPP
