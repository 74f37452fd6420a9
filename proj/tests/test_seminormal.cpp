#include "kronsec/characters.hpp"
#include "kronsec/seminormal.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kronsec;

TEST(Seminormal, TrivialAndSign) {
  const auto triv = build_rep({4});
  ASSERT_EQ(triv.dimension(), 1u);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(triv.generator(i)(0, 0), 1);

  const auto sign = build_rep({1, 1});
  ASSERT_EQ(sign.dimension(), 1u);
  EXPECT_EQ(sign.generator(1)(0, 0), -1);
}

TEST(Seminormal, StandardRepOfS3) {
  const auto rep = build_rep({2, 1});
  ASSERT_EQ(rep.dimension(), 2u);
  EXPECT_EQ(rep.generator(1).trace(), mn_value({2, 1}, {2, 1}));
  EXPECT_EQ(rep.generator(1).trace(), 0);
  const std::vector<int> aba{1, 2, 1}, bab{2, 1, 2};
  EXPECT_EQ(evaluate_word(rep, aba), evaluate_word(rep, bab));
}

TEST(Seminormal, EvaluateWordBasics) {
  const auto rep = build_rep({3, 2});
  EXPECT_TRUE(evaluate_word(rep, std::vector<int>{}).is_identity());
  EXPECT_TRUE(evaluate_word(rep, std::vector<int>{1, 1}).is_identity());
  EXPECT_THROW(evaluate_word(rep, std::vector<int>{5}), DomainError);
  EXPECT_THROW(evaluate_word(rep, std::vector<int>{0}), DomainError);
}

TEST(Seminormal, Rejections) {
  EXPECT_THROW(build_rep({1}), DomainError);
  EXPECT_THROW(build_rep({4, 3, 2, 1}, 100), CapacityError);  // dimension 768
}

TEST(Seminormal, LastLetterOrder) {
  const auto tabs = standard_tableaux({2, 1});
  ASSERT_EQ(tabs.size(), 2u);
  // Letter 3 in the top row first.
  EXPECT_EQ(tabs[0][2].row, 0);
  EXPECT_EQ(tabs[1][2].row, 1);
}

TEST(Seminormal, CoxeterRelationsExact) {
  for (int n = 2; n <= 6; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const auto rep = build_rep(shape);
      std::vector<RationalMatrix> g;
      for (int i = 1; i < n; ++i) g.push_back(rep.generator(i));
      for (int i = 0; i + 1 < n; ++i) {
        EXPECT_TRUE((g[i] * g[i]).is_identity()) << to_string(shape);
        if (i + 2 < n) EXPECT_EQ(g[i] * g[i + 1] * g[i], g[i + 1] * g[i] * g[i + 1]) << to_string(shape);
        for (int j = i + 2; j + 1 < n; ++j) EXPECT_EQ(g[i] * g[j], g[j] * g[i]) << to_string(shape);
      }
      EXPECT_TRUE(spherical_relation_image(rep).is_identity());
    }
}

TEST(Seminormal, SphericalRelationExamples) {
  EXPECT_TRUE(spherical_relation_image(build_rep({2, 1})).is_identity());
  EXPECT_TRUE(spherical_relation_image(build_rep({3, 1})).is_identity());
  EXPECT_TRUE(spherical_relation_image(build_rep({1, 1})).is_identity());
}

TEST(Seminormal, RandomWordTracesMatchCharacters) {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 6; ++n)
    for (const auto& shape : enumerate_partitions(n)) {
      const auto rep = build_rep(shape);
      std::uniform_int_distribution<int> gen(1, n - 1), len(0, 20);
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> word(static_cast<std::size_t>(len(rng)));
        for (auto& w : word) w = gen(rng);
        const Rational tr = evaluate_word(rep, word).trace();
        EXPECT_EQ(tr, mn_value(shape, cycle_type(word_permutation(n, word)))) << to_string(shape);
      }
    }
}

TEST(Seminormal, DimensionCensus) {
  for (int n = 2; n <= 8; ++n) {
    Integer total = 0;
    for (const auto& shape : enumerate_partitions(n)) {
      const auto rep = build_rep(shape);
      EXPECT_EQ(Integer(rep.dimension()), dimension(shape));
      total += Integer(rep.dimension()) * rep.dimension();
    }
    EXPECT_EQ(total, factorial(n));
  }
}
