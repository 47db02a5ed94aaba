#include "rectflip/permutation.h"

#include <gtest/gtest.h>

#include "oracles.h"

namespace rectflip {
namespace {

TEST(PermutationTest, ParsesDigitsAndCommas) {
  EXPECT_EQ(Permutation::parse("4165372").str(), "4165372");
  const Permutation big = Permutation::parse("10, 2, 1, 3, 4, 5, 6, 7, 8, 9");
  EXPECT_EQ(big.size(), 10);
  EXPECT_EQ(big(1), 10);
  EXPECT_EQ(big.str(), "10,2,1,3,4,5,6,7,8,9");
  EXPECT_EQ(Permutation::parse(big.str()), big);
}

TEST(PermutationTest, RejectsNonPermutations) {
  EXPECT_THROW(Permutation::parse("112"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("13"), std::invalid_argument);
  EXPECT_THROW(Permutation::parse("1a2"), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
}

TEST(PermutationTest, InverseComposesToIdentity) {
  for (const Permutation& p : oracle::permutations(5)) {
    const Permutation q = inverse(p);
    for (int i = 1; i <= 5; ++i) EXPECT_EQ(q(p(i)), i);
    EXPECT_EQ(inverse(q), p);
  }
}

TEST(PermutationTest, InversionSetMatchesPositionalCount) {
  for (const Permutation& p : oracle::permutations(5)) {
    const auto expected = oracle::inversions(p);
    const auto got = inversion_set(p);
    const std::set<std::pair<int, int>> as_set(got.begin(), got.end());
    EXPECT_EQ(as_set, expected);
    EXPECT_EQ(inversion_count(p), static_cast<int>(expected.size()));
  }
}

TEST(PermutationTest, Swaps) {
  const Permutation p = Permutation::parse("4165372");
  EXPECT_EQ(consecutive_value_swap(p, 4).str(), "5164372");
  EXPECT_EQ(adjacent_position_swap(p, 1).str(), "1465372");
  EXPECT_THROW(consecutive_value_swap(p, 7), std::out_of_range);
  EXPECT_THROW(adjacent_position_swap(p, 0), std::out_of_range);
}

TEST(PermutationTest, ValueSwapIsPositionSwapOfInverse) {
  for (const Permutation& p : oracle::permutations(4)) {
    for (int k = 1; k < 4; ++k) {
      EXPECT_EQ(inverse(consecutive_value_swap(p, k)),
                adjacent_position_swap(inverse(p), k));
    }
  }
}

TEST(VincularPatternTest, RoundTrip) {
  const VincularPattern v = VincularPattern::parse("3[14]2");
  EXPECT_EQ(v.word.str(), "3142");
  EXPECT_EQ(v.glued, std::vector<int>{2});
  EXPECT_EQ(v.str(), "3[14]2");
  EXPECT_EQ(VincularPattern::parse("2413").glued.size(), 0u);
}

TEST(VincularPatternTest, AdjacencyMatters) {
  // 3142 occurs classically in 41352, never with the 1 and 4 adjacent.
  const Permutation host = Permutation::parse("41352");
  EXPECT_TRUE(contains_vincular(host, VincularPattern::parse("3142")));
  EXPECT_FALSE(contains_vincular(host, VincularPattern::parse("3[14]2")));
}

TEST(VincularPatternTest, MatchesBruteForceOracle) {
  const char* patterns[] = {"3[14]2", "2[41]3", "3[41]2", "2[14]3", "[21]3", "1[32]"};
  for (int n = 1; n <= 7; ++n) {
    for (const Permutation& p : oracle::permutations(n)) {
      for (const char* text : patterns) {
        const VincularPattern v = VincularPattern::parse(text);
        const auto w = v.word.word();
        ASSERT_EQ(contains_vincular(p, v),
                  oracle::contains(oracle::word_of(p), {w.begin(), w.end()}, v.glued))
            << p.str() << " " << text;
      }
    }
  }
}

TEST(PatternClassTest, BaxterNumbers) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_EQ(static_cast<long long>(enumerate_avoiders(n, PatternClass::kBaxter).size()),
              oracle::baxter_number(n))
        << n;
  }
}

TEST(PatternClassTest, MosaicClassesAreEquinumerous) {
  for (int n = 1; n <= 7; ++n) {
    const size_t baxter = enumerate_avoiders(n, PatternClass::kBaxter).size();
    EXPECT_EQ(enumerate_avoiders(n, PatternClass::kTwistedBaxter).size(), baxter);
    EXPECT_EQ(enumerate_avoiders(n, PatternClass::kRightmost).size(), baxter);
  }
}

TEST(PatternClassTest, KnownCounts) {
  const size_t separable[] = {1, 1, 2, 6, 22, 90, 394, 1806};
  const size_t s_class[] = {1, 1, 2, 6, 22, 88, 374};
  for (int n = 0; n <= 7; ++n) {
    EXPECT_EQ(enumerate_avoiders(n, PatternClass::kSeparable).size(), separable[n]);
  }
  for (int n = 0; n <= 6; ++n) {
    size_t brute = 0;
    for (const Permutation& p : oracle::permutations(n)) {
      const auto w = oracle::word_of(p);
      if (!oracle::contains(w, {3, 4, 1, 2}, {2}) && !oracle::contains(w, {2, 1, 4, 3}, {2})) {
        ++brute;
      }
    }
    EXPECT_EQ(enumerate_avoiders(n, PatternClass::kS).size(), brute);
    EXPECT_EQ(brute, s_class[n]);
  }
}

TEST(PatternClassTest, EnumerationIsLexicographic) {
  const auto all = enumerate_avoiders(5, PatternClass::kBaxter);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(all_permutations(4).size(), 24u);
}

TEST(PatternClassTest, Names) {
  for (PatternClass c : {PatternClass::kSeparable, PatternClass::kBaxter,
                         PatternClass::kTwistedBaxter, PatternClass::kRightmost,
                         PatternClass::kS}) {
    EXPECT_EQ(parse_class(class_name(c)), c);
  }
  EXPECT_THROW(parse_class("nope"), std::invalid_argument);
}

TEST(PatternClassTest, WorkedExamples) {
  EXPECT_TRUE(is_baxter(Permutation::parse("4651372")));
  EXPECT_TRUE(avoids(Permutation::parse("4165372"), PatternClass::kTwistedBaxter));
  EXPECT_FALSE(is_baxter(Permutation::parse("4165372")));
  EXPECT_TRUE(is_baxter(Permutation::parse("34126587")));
}

}  // namespace
}  // namespace rectflip
