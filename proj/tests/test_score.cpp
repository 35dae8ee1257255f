#include <gtest/gtest.h>

#include "../oracle/brute_force_scorer.hpp"
#include "properties.hpp"
#include "sigdoc/score.hpp"

using namespace sigdoc;

namespace {

SignatureWordSet sig_of(std::initializer_list<const char*> parts) {
  SignatureWordSet sig;
  for (const char* p : parts) sig.insert_text(p);
  return sig;
}

ScoreRecord score(std::string_view doc, const SignatureWordSet& sig) {
  return score_function(make_doc_bag(doc, StopWordList::defaults()), sig);
}

}  // namespace

TEST(Score, JavaDocFixture) {
  auto rec = score("Sets the tool tip text.\n\n@param text  the text of the tool tip",
                   sig_of({"set", "tool", "tip", "text", "string", "public", "void"}));
  EXPECT_EQ(rec.total_words, 13u);
  EXPECT_EQ(rec.meaningful_words, 9u);
  EXPECT_EQ(rec.meaningless_words, 8u);
  EXPECT_EQ(rec.meaningless(), Ratio(8, 9));
  EXPECT_EQ(rec.meaningless()->to_fixed(), "0.888889");
}

TEST(Score, FullAndZeroOverlap) {
  EXPECT_EQ(score("Read the user name", sig_of({"read_user_name"})).meaningless(), Ratio::one());
  EXPECT_EQ(score("Fetches remote rows lazily", sig_of({"read_user_name"})).meaningless(), Ratio::zero());
}

TEST(Score, UndefinedWhenNoMeaningfulWords) {
  auto rec = score("It was at the, of that. A x", sig_of({"f"}));
  EXPECT_EQ(rec.meaningful_words, 0u);
  EXPECT_EQ(rec.total_words, 8u);
  EXPECT_FALSE(rec.meaningless());
}

TEST(Classify, ShortenedAndDirect) {
  const auto& stops = StopWordList::defaults();
  auto sig = sig_of({"read_info"});
  auto v = classify_word(Word("information"), sig, stops);
  EXPECT_EQ(v.verdict, Verdict::Shortened);
  EXPECT_EQ(v.matched, Word("info"));
  EXPECT_EQ(classify_word(Word("info"), sig, stops).verdict, Verdict::Direct);
  EXPECT_EQ(classify_word(Word("write"), sig, stops).verdict, Verdict::Novel);
  EXPECT_TRUE(is_meaningless(Word("information"), sig));
  EXPECT_FALSE(is_meaningless(Word("infer"), sig));
}

TEST(Classify, SubstringIsContiguousNotSubsequence) {
  auto sig = sig_of({"tool"});
  EXPECT_TRUE(is_meaningless(Word("toolbar"), sig));
  EXPECT_TRUE(is_meaningless(Word("stool"), sig));
  EXPECT_FALSE(is_meaningless(Word("topcoal"), sig));
}

TEST(Classify, ShortAndStopSignatureWordsDoNotMatchInside) {
  // Parameter `n` and signature stop word `the` would otherwise match almost everything.
  auto sig = sig_of({"n", "the"});
  EXPECT_FALSE(is_meaningless(Word("number"), sig));
  EXPECT_FALSE(is_meaningless(Word("theme"), sig));
}

TEST(Classify, StopListParameterControlsTheSubstringFilter) {
  auto sig = sig_of({"set"});
  StopWordList custom{StopWordList::Set{"set"}};
  EXPECT_TRUE(is_meaningless(Word("settings"), sig, StopWordList::defaults()));
  EXPECT_FALSE(is_meaningless(Word("settings"), sig, custom));
  EXPECT_TRUE(is_meaningless(Word("set"), sig, custom));
}

TEST(Explain, VerdictsInBagOrder) {
  auto bag = make_doc_bag("Information about the info toolbar", StopWordList::defaults());
  auto v = explain_score(bag, sig_of({"info", "tool"}), StopWordList::defaults());
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v[0].word, Word("information"));
  EXPECT_EQ(v[0].verdict, Verdict::Shortened);
  EXPECT_EQ(v[1].verdict, Verdict::Novel);
  EXPECT_FALSE(v[1].matched);
  EXPECT_EQ(v[2].verdict, Verdict::Direct);
  EXPECT_EQ(v[3].verdict, Verdict::Shortened);
  EXPECT_EQ(to_string(Verdict::Shortened), "shortened");
}

TEST(ScoreRecord, EndToEnd) {
  FunctionRecord rec{.file = "m.py", .line = 3, .name = "get_rate", .param_names = {"currency"},
                     .param_types = {"str"}, .docstring = "Get the rate for the currency."};
  auto s = score_record(rec, StopWordList::defaults());
  ASSERT_TRUE(s);
  EXPECT_EQ(s->file, "m.py");
  EXPECT_EQ(s->line, 3u);
  EXPECT_EQ(s->function, "get_rate");
  EXPECT_EQ(s->meaningless(), Ratio::one());
  rec.docstring = "  \n ";
  EXPECT_FALSE(score_record(rec, StopWordList::defaults()));
}

TEST(Oracle, AgreesOnHandPickedCases) {
  for (const auto& [doc, sig] : std::vector<std::pair<std::string, std::vector<std::string>>>{
           {"Sets the tool tip text.", {"setToolTipText", "String"}},
           {"HTTPServer handles HTTP requests", {"serve_http"}},
           {"utf8Decoder decodes UTF8", {"decode", "utf8"}},
           {"A x of it", {"x"}}}) {
    auto expected = oracle::score(doc, sig);
    SignatureWordSet s;
    for (const auto& p : sig) s.insert_text(p);
    auto got = score(doc, s);
    EXPECT_EQ(got.meaningful_words, expected.meaningful) << doc;
    EXPECT_EQ(got.meaningless_words, expected.meaningless) << doc;
  }
}

TEST(ScoreProperties, OracleEquivalence) {
  auto r = sigdoc::test::check_oracle_equivalence(301u, 2000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ScoreProperties, MonotonicityUnderSignatureGrowth) {
  auto r = sigdoc::test::check_score_monotonicity(302u, 1000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ScoreProperties, PermutationInvariance) {
  auto r = sigdoc::test::check_score_permutation(303u, 1000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}

TEST(ScoreProperties, DuplicationInvariance) {
  auto r = sigdoc::test::check_score_duplication(304u, 1000);
  EXPECT_TRUE(r.ok()) << r.first_failure;
}
