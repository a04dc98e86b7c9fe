#include <gtest/gtest.h>

#include "gogmagog/enumeration.hpp"
#include "gogmagog/schutzenberger.hpp"
#include "gogmagog/tableau.hpp"
#include "helpers.hpp"

using namespace gogmagog;

namespace {

const char* kGtExample = "1 2 2 3 6 / 1 2 2 5 / 2 2 4 / 2 4 / 3";

const Ssyt kPaperTableau{{{1, 1, 1, 2, 4, 5}, {2, 2, 5}, {3, 3}, {4, 5}, {5}}};

}  // namespace

TEST(Tableau, PaperExample) {
  const Ssyt s = gt_to_ssyt(tri(kGtExample));
  EXPECT_EQ(s, kPaperTableau);
  EXPECT_TRUE(is_valid_ssyt(s));
  EXPECT_EQ(ssyt_to_gt(kPaperTableau, 5), tri(kGtExample));
}

TEST(Tableau, SmallExamples) {
  EXPECT_EQ(gt_to_ssyt(tri("1 2 / 1")), (Ssyt{{{1, 2}, {2}}}));
  EXPECT_EQ(ssyt_to_gt(Ssyt{{{1, 2}, {2}}}, 2), tri("1 2 / 1"));
  EXPECT_EQ(gt_to_ssyt(tri("4")), (Ssyt{{{1, 1, 1, 1}}}));
  EXPECT_EQ(ssyt_to_gt(Ssyt{{{1, 1, 1, 1}}}, 1), tri("4"));
}

TEST(Tableau, LetterBound) {
  EXPECT_THROW(ssyt_to_gt(kPaperTableau, 4), InvalidInput);
  EXPECT_THROW(ssyt_to_gt(Ssyt{{{1}, {2}, {3}}}, 2), InvalidInput);
}

TEST(Tableau, Validity) {
  EXPECT_TRUE(is_valid_ssyt(Ssyt{}));
  EXPECT_FALSE(is_valid_ssyt(Ssyt{{{2, 1}}}));
  EXPECT_TRUE(is_valid_ssyt(Ssyt{{{1, 2}, {2}}}));
  EXPECT_FALSE(is_valid_ssyt(Ssyt{{{1, 2}, {1}}}));
  EXPECT_FALSE(is_valid_ssyt(Ssyt{{{1}, {2, 3}}}));
}

TEST(Tableau, ReadingWord) {
  EXPECT_EQ(reading_word(kPaperTableau), (Word{5, 4, 5, 3, 3, 2, 2, 5, 1, 1, 1, 2, 4, 5}));
  EXPECT_EQ(reading_word(Ssyt{{{1, 1, 3}}}), (Word{1, 1, 3}));
  EXPECT_EQ(reading_word(Ssyt{{{1}, {2}, {3}, {4}}}), (Word{4, 3, 2, 1}));
}

TEST(Tableau, ComplementReverse) {
  const Word w{5, 4, 5, 3, 3, 2, 2, 5, 1, 1, 1, 2, 4, 5};
  EXPECT_EQ(word_complement_reverse(w, 5), (Word{1, 2, 4, 5, 5, 5, 1, 4, 4, 3, 3, 1, 2, 1}));
  EXPECT_TRUE(word_complement_reverse({}, 3).empty());
  EXPECT_EQ(word_complement_reverse(word_complement_reverse(w, 5), 5), w);
}

TEST(Tableau, Insertion) {
  EXPECT_EQ(rsk_insertion_tableau({2, 1}), (Ssyt{{{1}, {2}}}));
  EXPECT_EQ(rsk_insertion_tableau({1, 1, 2}), (Ssyt{{{1, 1, 2}}}));
  EXPECT_TRUE(rsk_insertion_tableau({}).rows.empty());
  EXPECT_EQ(rsk_insertion_tableau(reading_word(kPaperTableau)), kPaperTableau);
}

TEST(Tableau, WordOracle) {
  EXPECT_EQ(schutzenberger_word_oracle(tri("1 2 / 2")), tri("1 2 / 1"));
  EXPECT_EQ(schutzenberger_word_oracle(tri("1 1 / 1")), tri("1 1 / 1"));
  EXPECT_EQ(schutzenberger_word_oracle(tri(kGtExample)), schutzenberger(tri(kGtExample)));
}

TEST(Tableau, ExhaustiveRoundTripAndOracleInvolution) {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : generate({Family::Gt, n, {}, 5})) {
      const Ssyt s = gt_to_ssyt(t);
      ASSERT_TRUE(is_valid_ssyt(s));
      ASSERT_EQ(ssyt_to_gt(s, n), t);
      ASSERT_EQ(schutzenberger_word_oracle(schutzenberger_word_oracle(t)), t);
    }
}
