#include <gtest/gtest.h>

#include "negeval/error.hpp"
#include "negeval/metrics.hpp"
#include "negeval/report.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace negeval;

namespace {

struct Fig1 {
  Corpus gold = strip_punctuation(support::load_conll("fig1_gold.conll"));
  Corpus a = strip_punctuation(support::load_conll("fig1_system_a.conll"));
  Corpus b = strip_punctuation(support::load_conll("fig1_system_b.conll"));
};

std::vector<InstanceAlignment> exact(const Corpus& g, const Corpus& p) {
  return align_corpus(g, p, CueMatchMode::Exact);
}

Sentence one(std::vector<NegationInstance> instances, std::size_t n = 10) {
  auto s = support::plain_sentence(n, "d", 0);
  for (std::size_t i = 0; i < instances.size(); ++i) instances[i].instance_id = i;
  s.instances = std::move(instances);
  return s;
}

Corpus corpus_of(std::vector<Sentence> sentences) {
  Corpus c;
  for (std::size_t i = 0; i < sentences.size(); ++i) sentences[i].sent_index = i;
  c.sentences = std::move(sentences);
  return c;
}

// Straight SCM-B count from the definitions, independent of metrics.cpp.
PRF scm_b_oracle(const std::vector<InstanceAlignment>& alignments) {
  double tp = 0, gold = 0, pred = 0;
  for (const auto& a : alignments) {
    gold += static_cast<double>(a.gold_count());
    pred += static_cast<double>(a.pred_count());
    for (const auto& [g, p] : a.matched) tp += g.scope == p.scope ? 1 : 0;
  }
  PRF r;
  if (gold == 0 && pred == 0) {
    r.precision = r.recall = r.f1 = 1;
    return r;
  }
  r.precision = pred > 0 ? tp / pred : 0;
  r.recall = gold > 0 ? tp / gold : 0;
  r.f1 = r.precision + r.recall > 0 ? 2 * r.precision * r.recall / (r.precision + r.recall) : 0;
  return r;
}

}  // namespace

TEST(Rounding, HalfAwayFromZero) {
  EXPECT_DOUBLE_EQ(round_percent(0.85), 85.0);
  EXPECT_DOUBLE_EQ(round_percent(0.8505), 85.1);
  EXPECT_DOUBLE_EQ(round_percent(17.0 / 21), 81.0);
  EXPECT_DOUBLE_EQ(round_percent(2.0 / 3, 2), 66.67);
  EXPECT_DOUBLE_EQ(round_percent(-0.00125, 2), -0.13);
}

TEST(ScopeScores, TokenScorerEdgeCases) {
  auto s = f_tok(ElementSet{}, ElementSet{1, 2, 3, 4});
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.recall, 1.0);
  s = f_tok(ElementSet{}, ElementSet{});
  EXPECT_EQ(s.precision, 1.0);
  EXPECT_EQ(s.recall, 1.0);
}

TEST(ScopeScores, FigureOneSentenceThreeSystemB) {
  Fig1 f;
  const auto& g = f.gold.sentences[2].instances[0].scope;
  const auto& p = f.b.sentences[2].instances[0].scope;
  ASSERT_EQ(g.size(), 16u);
  ASSERT_EQ(p.size(), 12u);
  auto s = f_tok(g, p);
  EXPECT_DOUBLE_EQ(s.precision, 10.0 / 12);
  EXPECT_DOUBLE_EQ(s.recall, 10.0 / 16);
}

TEST(ScopeScores, ExactScorer) {
  EXPECT_EQ(f_exact(ElementSet{1, 2}, ElementSet{1, 2}).precision, 1.0);
  EXPECT_EQ(f_exact(ElementSet{}, ElementSet{}).recall, 1.0);
  auto s = f_exact(ElementSet{1, 2}, ElementSet{1});
  EXPECT_EQ(s.precision, 0.0);
  EXPECT_EQ(s.recall, 0.0);
}

TEST(ScopeTokens, FigureOne) {
  Fig1 f;
  auto a = scope_tokens(exact(f.gold, f.a));
  EXPECT_EQ(a.precision_numerator, 17);
  EXPECT_EQ(a.precision_denominator, 21);
  EXPECT_EQ(a.recall_denominator, 19);
  EXPECT_DOUBLE_EQ(round_percent(a.precision), 81.0);
  EXPECT_DOUBLE_EQ(round_percent(a.recall), 89.5);
  EXPECT_DOUBLE_EQ(round_percent(a.f1), 85.0);
  auto b = scope_tokens(exact(f.gold, f.b));
  EXPECT_DOUBLE_EQ(round_percent(b.precision), 86.7);
  EXPECT_DOUBLE_EQ(round_percent(b.recall), 68.4);
  EXPECT_DOUBLE_EQ(round_percent(b.f1), 76.5);
}

TEST(ScopeTokens, SentenceTwoSystemAHasTwoFalseNegatives) {
  Fig1 f;
  const auto& g = f.gold.sentences[1].instances[0].scope;
  const auto& p = f.a.sentences[1].instances[0].scope;
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.intersection_size(p), 1u);
  EXPECT_EQ(p.size() - g.intersection_size(p), 0u);
  EXPECT_EQ(g.size() - g.intersection_size(p), 2u);
}

TEST(ScopeTokens, SharedTokenCountsOncePerInstance) {
  auto s = one({{ElementSet{0}, ElementSet{1, 2, 3}, {}, 0}, {ElementSet{2}, ElementSet{3}, {}, 0}});
  auto c = corpus_of({s});
  auto st = scope_tokens(exact(c, c));
  EXPECT_EQ(st.precision_numerator, 4);
}

TEST(Nis, FigureOneTokenScorer) {
  Fig1 f;
  auto a = nis(exact(f.gold, f.a), ScopeScorer::token());
  EXPECT_DOUBLE_EQ(a.precision, (0 + 1 + 1) / 3.0);
  EXPECT_DOUBLE_EQ(a.recall, (1 + 1.0 / 3 + 1) / 3.0);
  EXPECT_DOUBLE_EQ(round_percent(a.precision), 66.7);
  EXPECT_DOUBLE_EQ(round_percent(a.recall), 77.8);
  EXPECT_DOUBLE_EQ(round_percent(a.f1), 71.8);
  auto b = nis(exact(f.gold, f.b), ScopeScorer::token());
  EXPECT_DOUBLE_EQ(round_percent(b.precision), 94.4);
  EXPECT_DOUBLE_EQ(round_percent(b.recall), 87.5);
  EXPECT_DOUBLE_EQ(round_percent(b.f1), 90.8);
}

TEST(Nis, GoldAgainstItselfIsPerfect) {
  Fig1 f;
  for (const auto& scorer : {ScopeScorer::token(), ScopeScorer::exact()}) {
    auto r = nis(exact(f.gold, f.gold), scorer);
    EXPECT_EQ(r.precision, 1.0);
    EXPECT_EQ(r.recall, 1.0);
    EXPECT_EQ(r.f1, 1.0);
  }
}

TEST(Nis, RejectsPartialAlignments) {
  Fig1 f;
  auto partial = align_corpus(f.gold, f.a, CueMatchMode::Partial);
  EXPECT_THROW(nis(partial, ScopeScorer::token()), UsageError);
  EXPECT_THROW(scope_tokens(partial), UsageError);
  EXPECT_THROW(scm(partial, ScoreVariant::B), UsageError);
}

TEST(Scm, WrongScopeSingleInstance) {
  auto g = corpus_of({one({{ElementSet{1}, ElementSet{2, 3}, {}, 0}})});
  auto p = corpus_of({one({{ElementSet{1}, ElementSet{2}, {}, 0}})});
  auto standard = scm(exact(g, p), ScoreVariant::Standard);
  EXPECT_EQ(standard.precision_denominator, 0);
  EXPECT_EQ(standard.precision, 0.0);
  EXPECT_EQ(standard.recall, 0.0);
  auto b = scm(exact(g, p), ScoreVariant::B);
  EXPECT_EQ(b.precision_denominator, 1);
  EXPECT_EQ(b.precision, 0.0);
}

TEST(Scm, PartialOnlyPredictionsLeaveStandardDenominator) {
  auto g = corpus_of({one({{ElementSet{1, 2}, ElementSet{3}, {}, 0}, {ElementSet{6}, ElementSet{7}, {}, 0}})});
  auto p = corpus_of({one({{ElementSet{1}, ElementSet{3}, {}, 0},
                           {ElementSet{6}, ElementSet{7}, {}, 0},
                           {ElementSet{9}, ElementSet{8}, {}, 0}})});
  auto standard = scm(exact(g, p), ScoreVariant::Standard);
  EXPECT_EQ(standard.precision_numerator, 1);
  EXPECT_EQ(standard.precision_denominator, 2);  // TP + prediction on token 9
  auto b = scm(exact(g, p), ScoreVariant::B);
  EXPECT_EQ(b.precision_denominator, 3);
}

TEST(Cues, ExactAndPartialOnMultiwordCue) {
  auto g = corpus_of({one({{ElementSet{2, 3}, {}, {}, 0}})});
  auto p = corpus_of({one({{ElementSet{2}, {}, {}, 0}})});
  auto e = cue_scores(align_corpus(g, p, CueMatchMode::Exact), CueMatchMode::Exact, ScoreVariant::B);
  EXPECT_EQ(e.precision_numerator, 0);
  auto q = cue_scores(align_corpus(g, p, CueMatchMode::Partial), CueMatchMode::Partial,
                      ScoreVariant::B);
  EXPECT_EQ(q.precision_numerator, 1);
  EXPECT_THROW(cue_scores(align_corpus(g, p, CueMatchMode::Exact), CueMatchMode::Partial,
                          ScoreVariant::B),
               UsageError);
}

TEST(Cues, NoPredictions) {
  auto g = corpus_of({one({{ElementSet{1}, {}, {}, 0}, {ElementSet{4}, {}, {}, 0}, {ElementSet{7}, {}, {}, 0}})});
  auto p = corpus_of({one({})});
  for (auto v : {ScoreVariant::Standard, ScoreVariant::B}) {
    auto r = cue_scores(exact(g, p), CueMatchMode::Exact, v);
    EXPECT_EQ(r.precision, 0.0);
    EXPECT_EQ(r.recall, 0.0);
  }
}

TEST(Cues, EmptyOnBothSidesIsVacuouslyPerfect) {
  auto c = corpus_of({one({})});
  auto r = cue_scores(exact(c, c), CueMatchMode::Exact, ScoreVariant::B);
  EXPECT_EQ(r.f1, 1.0);
}

TEST(Cns, FigureOne) {
  Fig1 f;
  EXPECT_DOUBLE_EQ(cns(f.gold, f.gold).value, 1.0);
  auto b = cns(f.gold, f.b);
  EXPECT_EQ(b.numerator, 2);
  EXPECT_EQ(b.denominator, 3);
}

TEST(Cns, SpuriousPredictionInNegationFreeSentence) {
  auto g = corpus_of({one({{ElementSet{1}, {}, {}, 0}}), one({})});
  auto p = corpus_of({one({{ElementSet{1}, {}, {}, 0}}), one({{ElementSet{3}, {}, {}, 0}})});
  auto r = cns(g, p);
  EXPECT_EQ(r.denominator, 1);
  EXPECT_EQ(r.value, 1.0);
  auto all = cns(g, p, CnsDenominator::AllSentences);
  EXPECT_EQ(all.denominator, 2);
  EXPECT_EQ(all.value, 0.5);
}

TEST(MetricProperties, RandomizedCorpora) {
  support::Rng rng(31337);
  for (int i = 0; i < 500; ++i) {
    auto g = strip_punctuation(support::random_corpus(rng));
    auto p = strip_punctuation(support::perturb(rng, g));
    auto fwd = exact(g, p);
    auto bwd = exact(p, g);
    auto st = scope_tokens(fwd);
    auto st_rev = scope_tokens(bwd);
    EXPECT_EQ(st.precision, st_rev.recall);
    EXPECT_EQ(st.recall, st_rev.precision);
    auto nt = nis(fwd, ScopeScorer::token());
    auto nt_rev = nis(bwd, ScopeScorer::token());
    EXPECT_EQ(nt.precision, nt_rev.recall);
    EXPECT_EQ(nt.recall, nt_rev.precision);

    auto reweighted = nis(fwd, ScopeScorer::token(), InstanceWeighting::ScopeLength);
    EXPECT_NEAR(reweighted.precision, st.precision, 1e-9);
    EXPECT_NEAR(reweighted.recall, st.recall, 1e-9);

    auto nex = nis(fwd, ScopeScorer::exact());
    auto oracle = scm_b_oracle(fwd);
    EXPECT_NEAR(nex.precision, oracle.precision, 1e-12);
    EXPECT_NEAR(nex.recall, oracle.recall, 1e-12);
    EXPECT_NEAR(nex.f1, oracle.f1, 1e-12);
    auto sb = scm(fwd, ScoreVariant::B);
    EXPECT_NEAR(nex.f1, sb.f1, 1e-12);

    for (const auto& m : {st, nt, nex, sb, scm(fwd, ScoreVariant::Standard)}) {
      EXPECT_GE(m.precision, 0.0);
      EXPECT_LE(m.precision, 1.0);
      EXPECT_GE(m.recall, 0.0);
      EXPECT_LE(m.recall, 1.0);
    }
  }
}

TEST(MetricProperties, AddingCorrectInstanceNeverHurtsNis) {
  support::Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    auto g = support::random_corpus(rng);
    auto p = support::perturb(rng, g);
    if (g.sentences.empty()) continue;
    auto before = nis(exact(g, p), ScopeScorer::token());
    auto& gs = g.sentences[0];
    auto& ps = p.sentences[0];
    NegationInstance extra;
    extra.cue.insert(AnnotationElement(gs.tokens.size()));  // fresh token at the end
    extra.scope = ElementSet{0};
    Token t;
    t.index = gs.tokens.size();
    t.surface = "never";
    gs.tokens.push_back(t);
    ps.tokens.push_back(t);
    extra.instance_id = gs.instances.size();
    gs.instances.push_back(extra);
    extra.instance_id = ps.instances.size();
    ps.instances.push_back(extra);
    auto after = nis(exact(g, p), ScopeScorer::token());
    EXPECT_GE(after.precision + 1e-12, before.precision);
    EXPECT_GE(after.recall + 1e-12, before.recall);
  }
}

TEST(MetricProperties, NonGoldTokenLowersTokenPrecisionOnly) {
  ElementSet gold{1, 2, 3};
  ElementSet pred{1, 2};
  auto before = f_tok(gold, pred);
  pred.insert(AnnotationElement(7));
  auto after = f_tok(gold, pred);
  EXPECT_LT(after.precision, before.precision);
  EXPECT_EQ(after.recall, before.recall);
}

TEST(Report, FigureOneFullReport) {
  auto gold = support::load_conll("fig1_gold.conll");
  auto a = full_report(gold, support::load_conll("fig1_system_a.conll"));
  auto b = full_report(gold, support::load_conll("fig1_system_b.conll"));
  const double expected_a[] = {81.0, 89.5, 85.0, 66.7, 77.8, 71.8};
  const double expected_b[] = {86.7, 68.4, 76.5, 94.4, 87.5, 90.8};
  for (auto [r, e] : {std::pair{&a, expected_a}, std::pair{&b, expected_b}}) {
    EXPECT_DOUBLE_EQ(round_percent(r->st.precision), e[0]);
    EXPECT_DOUBLE_EQ(round_percent(r->st.recall), e[1]);
    EXPECT_DOUBLE_EQ(round_percent(r->st.f1), e[2]);
    EXPECT_DOUBLE_EQ(round_percent(r->nis_tok.precision), e[3]);
    EXPECT_DOUBLE_EQ(round_percent(r->nis_tok.recall), e[4]);
    EXPECT_DOUBLE_EQ(round_percent(r->nis_tok.f1), e[5]);
  }
}

TEST(Report, GoldAgainstItself) {
  auto gold = support::load_conll("fig1_gold.conll");
  auto r = full_report(gold, gold);
  for (const auto& k : MetricReport::prf_keys()) EXPECT_EQ(r.prf(k).f1, 1.0) << k;
  EXPECT_EQ(r.cns.value, 1.0);
}

TEST(Report, JsonRoundTrip) {
  auto gold = support::load_conll("fig1_gold.conll");
  auto r = full_report(gold, support::load_conll("fig1_system_a.conll"));
  EXPECT_EQ(report_from_json(nlohmann::json::parse(to_json(r).dump())), r);
  auto j = to_json(r);
  j["schema_version"] = kReportSchemaVersion + 1;
  EXPECT_THROW(report_from_json(j), UsageError);
}

TEST(Report, DeltasAreBMinusA) {
  auto gold = support::load_conll("fig1_gold.conll");
  auto a = full_report(gold, support::load_conll("fig1_system_a.conll"));
  auto b = full_report(gold, support::load_conll("fig1_system_b.conll"));
  for (const auto& d : compare_reports(a, b)) {
    if (d.key == "cns") {
      EXPECT_DOUBLE_EQ(d.f1, b.cns.value - a.cns.value);
      continue;
    }
    EXPECT_DOUBLE_EQ(d.precision, b.prf(d.key).precision - a.prf(d.key).precision);
    EXPECT_DOUBLE_EQ(d.f1, b.prf(d.key).f1 - a.prf(d.key).f1);
  }
  for (const auto& d : compare_reports(a, a)) EXPECT_EQ(d.f1, 0.0);
}
