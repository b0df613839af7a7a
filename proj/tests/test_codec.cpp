#include <gtest/gtest.h>

#include <map>
#include <set>

#include "avoid1324/codec.hpp"
#include "avoid1324/containment.hpp"
#include "avoid1324/enumerate.hpp"
#include "avoid1324/words.hpp"
#include "oracles.hpp"

namespace avoid1324 {
namespace {

const Permutation k1324{1, 3, 2, 4};
const Permutation k132{1, 3, 2};
const Permutation k213{2, 1, 3};

CodePair pair_of(const char* w, const char* z) { return {TypeWord::parse(w), TypeWord::parse(z)}; }

std::vector<int> values_of(const std::vector<Extremum>& e) {
  std::vector<int> out;
  for (const auto& x : e) out.push_back(x.value);
  return out;
}
std::vector<int> positions_of(const std::vector<Extremum>& e) {
  std::vector<int> out;
  for (const auto& x : e) out.push_back(static_cast<int>(x.position));
  return out;
}

TEST(CodecTest, EncodeExamples) {
  EXPECT_EQ(encode(Permutation{3, 6, 1, 2, 7, 4, 5}), pair_of("ABABBCD", "ABACDBB"));
  EXPECT_EQ(encode(Permutation{1}), pair_of("A", "A"));
  EXPECT_EQ(encode(Permutation{3, 2, 1}), pair_of("AAA", "AAA"));
}

TEST(CodecTest, DecodeExamples) {
  const auto worked = decode(pair_of("ABABBCD", "ABACDBB"));
  ASSERT_TRUE(worked.ok());
  EXPECT_EQ(worked.value(), (Permutation{3, 6, 1, 2, 7, 4, 5}));

  const auto single = decode(pair_of("A", "A"));
  ASSERT_TRUE(single.ok());
  EXPECT_EQ(single.value(), Permutation{1});

  const auto bad = decode(pair_of("AB", "BA"));
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.failure().stage, FailureStage::Greedy);
}

TEST(CodecTest, DecodeFailureStagesAreDistinct) {
  EXPECT_EQ(decode(pair_of("AB", "AAA")).failure().stage, FailureStage::Shape);
  EXPECT_EQ(decode(pair_of("AB", "AC")).failure().stage, FailureStage::Shape);
  EXPECT_EQ(decode(pair_of("", "")).failure().stage, FailureStage::Shape);
  // B with no A on its left.
  EXPECT_EQ(decode(pair_of("BA", "AB")).failure().stage, FailureStage::Greedy);
  // C with no D on its right.
  EXPECT_EQ(decode(pair_of("ADC", "ACD")).failure().stage, FailureStage::Greedy);
  // The only B value, 2, cannot exceed the A entry 3 placed on its left.
  const auto v = decode(pair_of("ABA", "ABA"));
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.failure().stage, FailureStage::Greedy);
}

TEST(CodecTest, VerificationStageCatchesInconsistentPairs) {
  // Search for a pair whose greedy candidate exists but does not re-encode.
  bool saw_verification = false;
  for (std::size_t n = 2; n <= 5 && !saw_verification; ++n) {
    const auto tails = enumerate_cb_free(n - 1);
    for (const auto& wt : tails) {
      for (const auto& zt : tails) {
        TypeWord w, z;
        w.push_back(Mark::A);
        z.push_back(Mark::A);
        for (Mark m : wt.letters()) w.push_back(m);
        for (Mark m : zt.letters()) z.push_back(m);
        const auto r = decode({w, z});
        if (!r.ok() && r.failure().stage == FailureStage::Verification) saw_verification = true;
        if (!r.ok() && r.failure().stage == FailureStage::Verification) {
          DecodeOptions fast;
          fast.verify = false;
          const auto unchecked = decode({w, z}, fast);
          ASSERT_TRUE(unchecked.ok());
          EXPECT_TRUE(encode(unchecked.value()) != CodePair({w, z}) ||
                      contains(unchecked.value(), k1324));
        }
      }
    }
  }
  EXPECT_TRUE(saw_verification);
}

TEST(CodecTest, RoundTripAndInjectivityOnAvoiders) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<CodePair> images;
    std::size_t count = 0;
    for_each_avoider(n, k1324, [&](const Permutation& p) {
      const auto code = encode(p);
      images.insert(code);
      ++count;
      const auto back = decode(code);
      ASSERT_TRUE(back.ok()) << p.to_string() << ": " << back.failure().detail;
      ASSERT_EQ(back.value(), p);
      // Position types and value types count the same entries.
      ASSERT_EQ(code.w.letter_counts(), code.z.letter_counts());
    });
    EXPECT_EQ(images.size(), count) << "n=" << n;
    const auto h = count_cb_free(n);
    EXPECT_LE(BigInt(images.size()), h[n - 1] * h[n - 1]);
  }
}

TEST(CodecTest, DecodeIsSoundOnAllInitialAPairs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto tails = enumerate_cb_free(n - 1);
    std::size_t decoded = 0;
    for (const auto& wt : tails) {
      for (const auto& zt : tails) {
        TypeWord w, z;
        w.push_back(Mark::A);
        z.push_back(Mark::A);
        for (Mark m : wt.letters()) w.push_back(m);
        for (Mark m : zt.letters()) z.push_back(m);
        const CodePair code{w, z};
        const auto r = decode(code);
        if (!r.ok()) continue;
        ++decoded;
        ASSERT_TRUE(avoids(r.value(), k1324));
        ASSERT_EQ(encode(r.value()), code);
      }
    }
    // Every avoider is reached from exactly one pair.
    EXPECT_EQ(BigInt(decoded), count_avoiders(n, k1324)) << "n=" << n;
  }
}

TEST(CodecTest, UvEncodeExamples) {
  const auto [u, v] = uv_encode_132(Permutation{4, 3, 5, 6, 1, 2});
  EXPECT_EQ(u.to_string(), "001101");
  EXPECT_EQ(v.to_string(), "010011");
  const auto [du, dv] = uv_encode_132(Permutation::decreasing(5));
  EXPECT_EQ(du.to_string(), "00000");
  EXPECT_EQ(dv.to_string(), "00000");
  const auto [iu, iv] = uv_encode_132(Permutation{1, 2});
  EXPECT_EQ(iu.to_string(), "01");
  EXPECT_EQ(iv.to_string(), "01");
  EXPECT_THROW(uv_encode_132(k132), std::invalid_argument);
}

TEST(CodecTest, Reconstruct132Examples) {
  const auto worked = reconstruct_132({1, 3, 4}, {1, 2, 5}, 6);
  ASSERT_TRUE(worked.ok());
  EXPECT_EQ(worked.value(), (Permutation{4, 3, 5, 6, 1, 2}));
  const auto all = reconstruct_132({1, 2, 3, 4}, {1, 2, 3, 4}, 4);
  ASSERT_TRUE(all.ok());
  EXPECT_EQ(all.value(), Permutation::decreasing(4));
  const auto single = reconstruct_132({1}, {1}, 3);
  ASSERT_TRUE(single.ok());
  EXPECT_EQ(single.value(), (Permutation{1, 2, 3}));

  EXPECT_EQ(reconstruct_132({1, 4}, {1, 3}, 4).failure().stage, FailureStage::Greedy);
  EXPECT_EQ(reconstruct_132({1, 2}, {1}, 4).failure().stage, FailureStage::Shape);
  EXPECT_EQ(reconstruct_132({2, 3}, {1, 2}, 4).failure().stage, FailureStage::Shape);
}

TEST(CodecTest, UvInjectiveAndInvertedByReconstruction) {
  for (std::size_t n = 1; n <= 8; ++n) {
    std::set<std::pair<BinaryWord, BinaryWord>> seen;
    const auto avoiders = enumerate_avoiders(n, k132);
    for (const auto& p : avoiders) {
      seen.insert(uv_encode_132(p));
      const auto minima = ltr_minima(p);
      const auto back = reconstruct_132(values_of(minima), positions_of(minima), n);
      ASSERT_TRUE(back.ok());
      ASSERT_EQ(back.value(), p);
    }
    EXPECT_EQ(seen.size(), avoiders.size());
  }
}

TEST(CodecTest, Reconstruct213MatchesBruteForce) {
  // Every entry a right-to-left maximum forces the decreasing permutation.
  EXPECT_EQ(reconstruct_213({1, 2, 3, 4}, {1, 2, 3, 4}, 4).value(), Permutation::decreasing(4));
  EXPECT_EQ(reconstruct_213({4}, {4}, 4).value(), Permutation::identity(4));
  const auto hand = reconstruct_213({5, 4}, {3, 5}, 5);
  ASSERT_TRUE(hand.ok());
  EXPECT_EQ(hand.value(), (Permutation{1, 2, 5, 3, 4}));

  for (std::size_t n = 1; n <= 6; ++n) {
    // Index every 213-avoider by its maxima sets.
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Permutation>> by_maxima;
    for (const auto& p : oracle::filter_avoiders(n, k213)) {
      auto maxima = rtl_maxima(p);
      auto values = values_of(maxima);
      std::sort(values.begin(), values.end());
      by_maxima[{values, positions_of(maxima)}].push_back(p);
    }
    // Every candidate pair of sets of equal size containing n (values) and n (positions).
    for (unsigned vmask = 0; vmask < (1u << n); ++vmask) {
      for (unsigned pmask = 0; pmask < (1u << n); ++pmask) {
        std::vector<int> values, positions;
        for (std::size_t i = 0; i < n; ++i) {
          if (vmask & (1u << i)) values.push_back(static_cast<int>(i + 1));
          if (pmask & (1u << i)) positions.push_back(static_cast<int>(i + 1));
        }
        if (values.size() != positions.size() || values.empty()) continue;
        const auto r = reconstruct_213(values, positions, n);
        auto it = by_maxima.find({values, positions});
        if (it == by_maxima.end()) {
          ASSERT_FALSE(r.ok());
        } else {
          ASSERT_EQ(it->second.size(), 1u);
          ASSERT_TRUE(r.ok());
          ASSERT_EQ(r.value(), it->second.front());
          // Reverse-complement mirror of the 132 reconstruction.
          std::vector<int> mv, mp;
          for (int x : values) mv.push_back(static_cast<int>(n) + 1 - x);
          for (int x : positions) mp.push_back(static_cast<int>(n) + 1 - x);
          ASSERT_EQ(reconstruct_132(mv, mp, n).value().reverse_complement(), r.value());
        }
      }
    }
  }
}

}  // namespace
}  // namespace avoid1324
