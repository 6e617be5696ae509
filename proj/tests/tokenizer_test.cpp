#include <gtest/gtest.h>

#include <sstream>

#include "negeval/error.hpp"
#include "negeval/tokenizer.hpp"
#include "support/generators.hpp"

using namespace negeval;

namespace {

std::vector<std::string> words(std::string_view text,
                               const TokenizerConfig& config = TokenizerConfig::defaults()) {
  std::vector<std::string> out;
  for (const auto& t : tokenize(text, config)) out.push_back(t.text);
  return out;
}

using W = std::vector<std::string>;

}  // namespace

TEST(Tokenizer, SplitsPunctuation) {
  EXPECT_EQ(words("Mary, run!"), (W{"Mary", ",", "run", "!"}));
}

TEST(Tokenizer, KeepsUrlWhole) {
  EXPECT_EQ(words("see http://x.y/z now"), (W{"see", "http://x.y/z", "now"}));
  EXPECT_EQ(words("(www.example.com)."), (W{"(", "www.example.com", ")", "."}));
}

TEST(Tokenizer, CliticsAbbreviationsAndNumbers) {
  EXPECT_EQ(words("I don't know Mrs. Hudson's 1,000 cats."),
            (W{"I", "do", "n't", "know", "Mrs.", "Hudson", "'s", "1,000", "cats", "."}));
  EXPECT_EQ(words("e.g. this..."), (W{"e.g.", "this", "..."}));
}

TEST(Tokenizer, OffsetsPointIntoInput) {
  const std::string text = "  Not  here, (really)  ";
  for (const auto& t : tokenize(text, TokenizerConfig::defaults()))
    EXPECT_EQ(text.substr(t.begin, t.end - t.begin), t.text);
}

TEST(Tokenizer, TokensPartitionNonWhitespace) {
  support::Rng rng(5);
  const std::string alphabet = "abcXY09 ,.;:!?'\"()-/\t";
  const Tokenizer tok(TokenizerConfig::defaults());
  for (int i = 0; i < 1000; ++i) {
    std::string text;
    const auto n = support::uniform(rng, 0, 40);
    for (std::size_t k = 0; k < n; ++k) text += alphabet[support::uniform(rng, 0, alphabet.size() - 1)];
    if (support::coin(rng, 0.2)) text += " http://a.b/c?d=1";
    const auto tokens = tok(text);
    std::string rebuilt;
    std::size_t last = 0;
    for (const auto& t : tokens) {
      ASSERT_GE(t.begin, last);
      ASSERT_LT(t.begin, t.end);
      for (std::size_t k = last; k < t.begin; ++k) ASSERT_TRUE(text[k] == ' ' || text[k] == '\t');
      rebuilt += text.substr(last, t.begin - last) + t.text;
      last = t.end;
    }
    for (std::size_t k = last; k < text.size(); ++k) ASSERT_TRUE(text[k] == ' ' || text[k] == '\t');
    rebuilt += text.substr(last);
    EXPECT_EQ(rebuilt, text);
    EXPECT_EQ(tok(text).size(), tokens.size());  // deterministic
  }
}

TEST(TokenizerConfig, ParsesRuleFile) {
  std::istringstream in(
      "# custom\n"
      "url  [a-z]+://\\S+\n"
      "split , !\n"
      "edge .\n"
      "suffix n't\n"
      "abbrev approx.\n");
  auto c = TokenizerConfig::parse(in, "rules.txt");
  EXPECT_EQ(c.url_patterns, (W{"[a-z]+://\\S+"}));
  EXPECT_EQ(c.split_chars, (W{",", "!"}));
  EXPECT_EQ(words("approx. 5 isn't ok!", c), (W{"approx.", "5", "is", "n't", "ok", "!"}));
}

TEST(TokenizerConfig, UnknownRuleNamesLine) {
  std::istringstream in("split ,\nsplat x\n");
  try {
    TokenizerConfig::parse(in, "rules.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}
