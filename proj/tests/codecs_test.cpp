#include <gtest/gtest.h>

#include <sstream>

#include "negeval/error.hpp"
#include "negeval/sem_conll.hpp"
#include "negeval/xml_corpora.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace negeval;
using negeval::support::data_path;
using negeval::support::slurp;

namespace {

Corpus parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse_sem_conll(in, "inline");
}

Corpus parse_bioscope_file(const std::string& name, bool normalize = false) {
  std::istringstream in(slurp(data_path(name)));
  BioScopeOptions opts;
  opts.remove_cue_from_scope = normalize;
  return parse_bioscope(in, name, TokenizerConfig::defaults(), opts);
}

Corpus parse_sfu_file(const std::string& name) {
  std::istringstream in(slurp(data_path(name)));
  return parse_sfu(in, name, "review1");
}

}  // namespace

TEST(SemConll, AffixCueBecomesSubspan) {
  auto c = parse_text(
      "d\t0\t0\tIt\tit\tPRP\t_\t_\tIt\t_\n"
      "d\t0\t1\tis\tbe\tVBZ\t_\t_\tis\t_\n"
      "d\t0\t2\timprecise\timprecise\tJJ\t_\tim\tprecise\t_\n"
      "\n");
  ASSERT_EQ(c.sentences.size(), 1u);
  const auto& inst = c.sentences[0].instances.at(0);
  ASSERT_EQ(inst.cue.size(), 1u);
  const auto& cue = inst.cue.front();
  EXPECT_EQ(cue.token(), 2u);
  EXPECT_EQ(cue.begin(), 0u);
  EXPECT_EQ(cue.end(), 2u);
  EXPECT_TRUE(inst.scope.contains(AnnotationElement::part(2, "imprecise", 2, 9)));
  EXPECT_EQ(inst.scope.size(), 3u);
}

TEST(SemConll, StarsGiveNoInstances) {
  auto c = parse_text("d\t3\t0\tFine\tfine\tJJ\t_\t***\nd\t3\t1\t.\t.\t.\t_\t***\n\n");
  ASSERT_EQ(c.sentences.size(), 1u);
  EXPECT_EQ(c.sentences[0].sent_index, 3u);
  EXPECT_TRUE(c.sentences[0].instances.empty());
  EXPECT_TRUE(c.sentences[0].tokens[1].is_punct);
}

TEST(SemConll, WhitespaceSeparatedInput) {
  auto c = parse_text("d  0  0  not  not  RB  _  not  _  _\nd  0  1  bad  bad  JJ  _  _  bad  _\n");
  ASSERT_EQ(c.sentences.size(), 1u);
  EXPECT_EQ(c.sentences[0].instances[0].scope, (ElementSet{1}));
}

TEST(SemConll, ErrorsCarryLineNumbers) {
  try {
    parse_text("d\t0\t0\tno\tno\tDT\t_\tno\t_\t_\nd\t0\t1\tway\tway\tNN\t_\t_\tway\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_text("d\t0\t0\tno\tno\tDT\t_\tnot\t_\t_\n"), ParseError);
  EXPECT_THROW(parse_text("d\t0\t1\tno\tno\tDT\t_\t***\n"), ParseError);
  EXPECT_THROW(parse_text("d\t0\t0\tno\tno\tDT\n"), ParseError);
  EXPECT_THROW(parse_text("d\t0\t0\tno\tno\tDT\t_\t***\t_\t_\t_\n"), ParseError);
}

TEST(SemConll, EmptyCorpusWritesNothing) { EXPECT_EQ(write_sem_conll(Corpus{}), ""); }

TEST(SemConll, AffixWrittenToCueColumn) {
  Corpus c;
  Sentence s;
  s.doc_id = "d";
  s.tokens.push_back(Token{0, "careless", std::nullopt, std::nullopt, std::nullopt, false});
  s.instances.push_back({ElementSet({AnnotationElement::part(0, "careless", 4, 8)}),
                         ElementSet({AnnotationElement::part(0, "careless", 0, 4)}), {}, 0});
  c.sentences.push_back(s);
  EXPECT_EQ(write_sem_conll(c), "d\t0\t0\tcareless\t_\t_\t_\tless\tcare\t_\n\n");
}

TEST(SemConll, FixtureRoundTripIsByteIdentical) {
  for (const auto* name : {"roundtrip.conll", "fig1_gold.conll", "fig1_system_a.conll",
                           "fig1_system_b.conll", "fig2.conll", "coordination.conll"}) {
    const auto text = slurp(data_path(name));
    EXPECT_EQ(write_sem_conll(parse_text(text)), text) << name;
  }
}

TEST(SemConll, RandomCorporaSurviveWriteThenParse) {
  support::Rng rng(2024);
  for (int i = 0; i < 300; ++i) {
    auto c = support::random_corpus(rng);
    auto back = parse_text(write_sem_conll(c));
    ASSERT_TRUE(structurally_equal(back, c)) << write_sem_conll(c);
  }
}

TEST(BioScope, CueStaysInScopeByDefault) {
  auto c = parse_bioscope_file("bioscope_sample.xml");
  const auto& s = c.sentences.at(0);
  EXPECT_EQ(s.doc_id, "90001");
  ASSERT_EQ(s.instances.size(), 1u);
  EXPECT_EQ(s.tokens[2].surface, "do");
  EXPECT_EQ(s.instances[0].cue, (ElementSet{2, 3}));
  EXPECT_EQ(s.instances[0].scope, (ElementSet{2, 3, 4, 5, 6, 7, 8}));
}

TEST(BioScope, NormalizedScopeDropsCue) {
  auto c = parse_bioscope_file("bioscope_sample.xml", true);
  EXPECT_EQ(c.sentences.at(0).instances.at(0).scope, (ElementSet{4, 5, 6, 7, 8}));
}

TEST(BioScope, SpeculationOnlySentenceHasNoInstances) {
  auto c = parse_bioscope_file("bioscope_sample.xml");
  EXPECT_TRUE(c.sentences.at(2).instances.empty());
}

TEST(BioScope, NestedScopesGiveNestedInstances) {
  auto c = parse_bioscope_file("bioscope_sample.xml");
  const auto& s = c.sentences.at(1);
  ASSERT_EQ(s.instances.size(), 2u);
  const auto& outer = s.instances[0];
  const auto& inner = s.instances[1];
  EXPECT_EQ(s.tokens[outer.cue.front().token()].surface, "no");
  EXPECT_EQ(s.tokens[inner.cue.front().token()].surface, "not");
  EXPECT_TRUE(inner.scope.is_subset_of(outer.scope));
  EXPECT_LT(inner.scope.size(), outer.scope.size());
}

TEST(BioScope, UrlInsideScopeIsOneToken) {
  auto c = parse_bioscope_file("bioscope_sample.xml");
  const auto& s = c.sentences.at(3);
  EXPECT_EQ(s.doc_id, "90002");
  EXPECT_EQ(s.sent_index, 0u);
  std::vector<std::string> words;
  for (const auto& t : s.tokens) words.push_back(t.surface);
  EXPECT_EQ(words, (std::vector<std::string>{"Binding", "was", "absent", "in", "mutant", "cells",
                                             "(", "see", "http://example.org/fig1.html", ")", "."}));
  EXPECT_EQ(s.instances.at(0).scope, (ElementSet{2, 3, 4, 5, 6, 7, 8, 9}));
}

TEST(BioScope, ElementsLieInsideTheirMarkup) {
  // Only tokens wholly inside an element's text are assigned to it, so the
  // cue "not" must not pull in the neighbouring "expressed".
  auto c = parse_bioscope_file("bioscope_sample.xml");
  const auto& inner = c.sentences.at(1).instances.at(1);
  EXPECT_EQ(inner.cue.size(), 1u);
  EXPECT_EQ(c.sentences.at(1).tokens[inner.scope.back().token()].surface, "cells");
}

TEST(BioScope, DanglingScopeIsAnError) {
  std::istringstream in(
      "<Document><sentence>x <xcope id=\"X1\">y</xcope></sentence></Document>");
  EXPECT_THROW(parse_bioscope(in, "bad.xml", TokenizerConfig::defaults()), ParseError);
}

TEST(Sfu, DiscontinuousScopeIsUnionOfSpans) {
  auto c = parse_sfu_file("sfu_sample.xml");
  ASSERT_EQ(c.sentences.size(), 3u);
  const auto& s = c.sentences[0];
  ASSERT_EQ(s.instances.size(), 1u);
  EXPECT_EQ(s.instances[0].cue, (ElementSet{6}));
  EXPECT_EQ(s.instances[0].scope, (ElementSet{0, 1, 5, 7}));
  EXPECT_TRUE(s.tokens[2].is_punct);
}

TEST(Sfu, InstanceCountMatchesHandCount) {
  auto c = parse_sfu_file("sfu_sample.xml");
  EXPECT_EQ(c.instance_count(), 2u);
  EXPECT_TRUE(c.sentences[1].instances.empty());
  EXPECT_EQ(c.sentences[2].instances.at(0).scope, (ElementSet{3, 4, 5}));
}

TEST(Sfu, UnknownReferenceIsAnError) {
  std::istringstream in(
      "<Review><sentence><xcope><ref ID=\"9\"/><W>a</W></xcope></sentence></Review>");
  EXPECT_THROW(parse_sfu(in, "bad.xml", "r"), ParseError);
}
