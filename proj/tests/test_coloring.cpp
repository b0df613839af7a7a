#include <gtest/gtest.h>

#include "avoid1324/coloring.hpp"
#include "avoid1324/containment.hpp"
#include "avoid1324/enumerate.hpp"
#include "avoid1324/words.hpp"
#include "oracles.hpp"

namespace avoid1324 {
namespace {

const Permutation k1324{1, 3, 2, 4};
const Permutation k132{1, 3, 2};
const Permutation k213{2, 1, 3};

TEST(ColoringTest, WorkedExample) {
  const auto cp = color(Permutation{3, 6, 1, 2, 7, 4, 5});
  EXPECT_EQ(cp.red_values(), (std::vector<int>{3, 6, 1, 2, 7}));
  EXPECT_EQ(cp.blue_values(), (std::vector<int>{4, 5}));
  EXPECT_EQ(position_word(cp).to_string(), "ABABBCD");
  EXPECT_EQ(value_word(cp).to_string(), "ABACDBB");
}

TEST(ColoringTest, HandExecuted351624) {
  // 3,5,1,6 red; 2 closes the red 132 (1,6,2); 4 sits above blue 2.
  const auto cp = color(Permutation{3, 5, 1, 6, 2, 4});
  EXPECT_EQ(cp.red_values(), (std::vector<int>{3, 5, 1, 6}));
  EXPECT_EQ(cp.blue_values(), (std::vector<int>{2, 4}));
  EXPECT_EQ(position_word(cp).to_string(), "ABABCD");
  EXPECT_EQ(value_word(cp).to_string(), "ACADBB");
}

TEST(ColoringTest, DecreasingIsAllRedA) {
  const auto cp = color(Permutation::decreasing(6));
  EXPECT_TRUE(cp.blue_values().empty());
  EXPECT_EQ(position_word(cp).to_string(), "AAAAAA");
  EXPECT_EQ(position_word(color(Permutation{3, 2, 1})).to_string(), "AAA");
  EXPECT_EQ(value_word(color(Permutation{3, 2, 1})).to_string(), "AAA");
  EXPECT_EQ(position_word(color(Permutation{1})).to_string(), "A");
  EXPECT_EQ(value_word(color(Permutation{1})).to_string(), "A");
}

TEST(ColoringTest, IncrementalRuleMatchesNaiveRescan) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for (const auto& v : oracle::all_permutations(n)) {
      const Permutation p(v);
      const auto cp = color(p);
      const auto red = oracle::naive_red_flags(p);
      for (std::size_t i = 1; i <= n; ++i)
        ASSERT_EQ(cp.color_at(i) == Color::Red, red[i - 1]) << p.to_string() << " at " << i;
    }
  }
}

TEST(ColoringTest, RedClassAvoids132OnAllPermutations) {
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& v : oracle::all_permutations(n)) {
      const Permutation p(v);
      const auto cp = color(p);
      ASSERT_FALSE(contains(std::span<const int>(cp.red_values()), k132)) << p.to_string();
      if (avoids(p, k1324))
        ASSERT_FALSE(contains(std::span<const int>(cp.blue_values()), k213)) << p.to_string();
    }
  }
}

TEST(ColoringTest, BlueClassCanContain213WhenInputContains1324) {
  // 1,4 red; 3 closes red 1,4,3; 2 closes red 1,4,2; 5 sits above blue 3.
  const auto cp = color(Permutation{1, 4, 3, 2, 5});
  EXPECT_EQ(cp.blue_values(), (std::vector<int>{3, 2, 5}));
  EXPECT_TRUE(contains(std::span<const int>(cp.blue_values()), k213));
}

TEST(ColoringTest, MarksAgreeWithColorsAndPartition) {
  for (const auto& v : oracle::all_permutations(7)) {
    const Permutation p(v);
    const auto cp = color(p);
    const auto counts = position_word(cp).letter_counts();
    EXPECT_EQ(counts[0] + counts[1] + counts[2] + counts[3], 7u);
    EXPECT_EQ(counts[0] + counts[1], cp.red_values().size());
    EXPECT_EQ(cp.mark_at(1), Mark::A);
    EXPECT_EQ(cp.mark_at(p.inverse().at(1)), Mark::A);
    // A marks are exactly the LTR minima of the red subsequence.
    const auto red = cp.red_values();
    const auto minima = ltr_minima(std::span<const int>(red));
    EXPECT_EQ(minima.size(), counts[0]);
    const auto blue = cp.blue_values();
    if (!blue.empty()) EXPECT_EQ(rtl_maxima(std::span<const int>(blue)).size(), counts[3]);
  }
}

TEST(ColoringTest, LemmaWordsOnAvoiders) {
  for (std::size_t n = 1; n <= 8; ++n) {
    for_each_avoider(n, k1324, [&](const Permutation& p) {
      const auto cp = color(p);
      const auto w = position_word(cp);
      const auto z = value_word(cp);
      ASSERT_TRUE(is_cb_free(w)) << p.to_string();
      ASSERT_TRUE(is_cb_free(z)) << p.to_string();
      ASSERT_EQ(w[0], Mark::A);
      ASSERT_EQ(z[0], Mark::A);
    });
  }
}

TEST(ColoringTest, NonAvoidersCanProduceCB) {
  // The word lemmas need 1324-avoidance: 351426 contains 3,4,2,6 ~ 1324 and w has a CB.
  const Permutation p{3, 5, 1, 4, 2, 6};
  EXPECT_TRUE(contains(p, k1324));
  EXPECT_EQ(position_word(color(p)).to_string(), "ABACBD");
}

}  // namespace
}  // namespace avoid1324
