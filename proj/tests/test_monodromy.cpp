#include "kronsec/monodromy.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kronsec;

namespace {

QPoly poly(std::initializer_list<long> low_to_high) {
  QPoly p;
  for (long c : low_to_high) p.emplace_back(QReal(c));
  return p;
}

std::vector<int> transposition(int n, int i) {
  auto p = identity_permutation(n);
  std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(i)]);
  return p;
}

TrackOptions halved(TrackOptions o) {
  o.max_step /= 2;
  return o;
}

}  // namespace

TEST(Monodromy, SquareRootLoop) {
  const QPoly base = poly({-1, 0, 1});  // z^2 - e^{i theta}
  const auto loop = track_roots(base, {circle(base, 0, 1.0)});
  EXPECT_EQ(cycle_notation(loop.permutation), "(1 2)");
  EXPECT_EQ(track_roots(base, {circle(base, 0, 1.0)}, halved({})).permutation, loop.permutation);
}

TEST(Monodromy, CubeRootLoop) {
  const QPoly base = poly({-1, 0, 0, 1});
  const auto loop = track_roots(base, {circle(base, 0, 1.0)});
  EXPECT_EQ(cycle_type(loop.permutation), Partition({3}));
  EXPECT_EQ(track_roots(base, {circle(base, 0, 1.0)}, halved({})).permutation, loop.permutation);
  // Going round twice gives the square; backwards the inverse.
  EXPECT_EQ(track_roots(base, {circle(base, 0, 1.0), circle(base, 0, 1.0)}).permutation,
            compose(loop.permutation, loop.permutation));
  EXPECT_EQ(track_roots(base, inverse_path({circle(base, 0, 1.0)})).permutation, inverse(loop.permutation));
}

TEST(Monodromy, SmallCircleIsTrivial) {
  // c_0 stays within 1/4 of -3/4, away from c_0 = 0.
  const QPoly base = poly({-1, 0, 1});
  EXPECT_TRUE(is_identity(track_roots(base, {circle(base, 0, 0.25)}).permutation));
}

TEST(Monodromy, ConstantPath) {
  const QPoly base = real_rooted_base(4);
  const auto loop = track_roots(base, {});
  EXPECT_TRUE(is_identity(loop.permutation));
  EXPECT_EQ(loop.stats.steps, 0);
}

TEST(Monodromy, GeneratorExamples) {
  EXPECT_EQ(cycle_notation(standard_generator_loop(3, 1).permutation), "(1 2)");
  EXPECT_EQ(cycle_notation(standard_generator_loop(5, 4).permutation), "(4 5)");
  EXPECT_EQ(generator_word_loop(3, {1, 2}).permutation, compose(transposition(3, 1), transposition(3, 2)));
  EXPECT_THROW(standard_generator_loop(3, 3), DomainError);
  EXPECT_THROW(standard_generator_loop(3, 0), DomainError);
}

TEST(Monodromy, AllGeneratorsAreAdjacentTranspositions) {
  for (int n = 2; n <= 8; ++n)
    for (int i = 1; i < n; ++i) {
      const auto loop = standard_generator_loop(n, i);
      EXPECT_EQ(loop.permutation, transposition(n, i)) << n << ' ' << i;
      EXPECT_EQ(standard_generator_loop(n, i, halved({})).permutation, loop.permutation);
    }
}

TEST(Monodromy, SphericalWordIsIdentity) {
  for (int n = 2; n <= 8; ++n) EXPECT_TRUE(is_identity(spherical_word_check(n))) << n;
}

// Concatenated paths against the left-to-right product of their pieces.
TEST(Monodromy, Functoriality) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    auto random_word = [&] {
      std::vector<int> w(1 + rng() % 4);
      for (auto& g : w) g = (1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1))) * (rng() % 2 ? 1 : -1);
      return w;
    };
    const auto w1 = random_word(), w2 = random_word();
    std::vector<int> both = w1;
    both.insert(both.end(), w2.begin(), w2.end());
    const auto p1 = generator_word_loop(n, w1).permutation;
    const auto p2 = generator_word_loop(n, w2).permutation;
    EXPECT_EQ(generator_word_loop(n, both).permutation, compose(p1, p2));
    // Matches the symmetric group image of the word read left to right.
    auto expected = identity_permutation(n);
    for (int g : both) expected = compose(expected, transposition(n, g > 0 ? g : -g));
    EXPECT_EQ(generator_word_loop(n, both).permutation, expected);
  }
}

TEST(Monodromy, InverseLoops) {
  const int n = 5;
  const auto path = generator_word_path(n, {1, 3, -2, 4, 4, 2});
  const auto forward = track_roots(real_rooted_base(n), path).permutation;
  const auto backward = track_roots(real_rooted_base(n), inverse_path(path)).permutation;
  EXPECT_EQ(backward, inverse(forward));
  auto there_and_back = path;
  for (const auto& s : inverse_path(path)) there_and_back.push_back(s);
  EXPECT_TRUE(is_identity(track_roots(real_rooted_base(n), there_and_back).permutation));
}

TEST(Monodromy, DefiningRepresentation) {
  for (int n = 2; n <= 8; ++n) {
    const Multiset expected{{Partition({n}), 1}, {Partition({n - 1, 1}), 1}};
    EXPECT_EQ(defining_rep_decomposition(n, 3, 11), expected) << n;
  }
}

TEST(Monodromy, CollisionIsReported) {
  // c_0 runs over the circle of radius 1/2 about -1/2, through c_0 = 0.
  const QPoly base = poly({-1, 0, 1});
  try {
    track_roots(base, {circle(base, 0, 0.5)});
    FAIL();
  } catch (const ContinuationError& e) {
    EXPECT_NE(std::string(e.what()).find("s = "), std::string::npos);
  }
}

TEST(Monodromy, RejectsBadInput) {
  EXPECT_THROW(base_roots(poly({0, 0, 1})), DomainError);
  EXPECT_THROW(track_roots(poly({-1, 0, 1}), {}, TrackOptions{-1.0}), DomainError);
  const QPoly base = poly({-1, 0, 1});
  EXPECT_THROW(circle(base, 3, 1.0), DomainError);
  EXPECT_THROW(circle(base, 0, 0.0), DomainError);
}
