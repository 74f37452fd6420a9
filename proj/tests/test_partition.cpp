#include "kronsec/partition.hpp"
#include "kronsec/seminormal.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace kronsec;

namespace {

// Partition counts by the coin-change recurrence, independent of enumeration.
std::vector<long long> partition_counts(int up_to) {
  std::vector<long long> p(static_cast<std::size_t>(up_to) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= up_to; ++part)
    for (int s = part; s <= up_to; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
  return p;
}

// Class sizes by walking all of S_n.
std::map<Partition, long long> brute_force_class_sizes(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::map<Partition, long long> sizes;
  do {
    ++sizes[cycle_type(perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sizes;
}

}  // namespace

TEST(Partition, RejectsInvalidParts) {
  EXPECT_THROW(Partition({1, 2}), DomainError);
  EXPECT_THROW(Partition({2, 0}), DomainError);
  EXPECT_EQ(Partition({3, 1, 1}).size(), 5);
  EXPECT_EQ(Partition{}.size(), 0);
}

TEST(Partition, EnumerateSmall) {
  const auto zero = enumerate_partitions(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].empty());

  const std::vector<Partition> four{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  EXPECT_EQ(enumerate_partitions(4), four);
  EXPECT_EQ(enumerate_partitions(10).size(), 42u);
  EXPECT_THROW(enumerate_partitions(-1), DomainError);
}

TEST(Partition, EnumerationCountsAndOrder) {
  const auto p = partition_counts(12);
  for (int n = 0; n <= 12; ++n) {
    const auto all = enumerate_partitions(n);
    EXPECT_EQ(static_cast<long long>(all.size()), p[static_cast<std::size_t>(n)]) << n;
    for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
    for (const auto& q : all) EXPECT_EQ(q.size(), n);
  }
}

TEST(Partition, StripAndAttach) {
  EXPECT_EQ(strip_first_row({5, 1}), Partition({1}));
  EXPECT_EQ(strip_first_row({4, 2, 1}), Partition({2, 1}));
  EXPECT_EQ(strip_first_row({7}), Partition{});
  EXPECT_THROW(strip_first_row(Partition{}), DomainError);

  EXPECT_EQ(attach_first_row({1}, 6), Partition({5, 1}));
  EXPECT_EQ(attach_first_row({2, 1}, 5), Partition({2, 2, 1}));
  try {
    attach_first_row({3}, 5);
    FAIL() << "expected rejection";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("n - |lambda| >= lambda_1"), std::string::npos);
  }
}

TEST(Partition, StripAttachInverse) {
  for (int n = 1; n <= 12; ++n)
    for (const auto& big : enumerate_partitions(n)) {
      const Partition small = strip_first_row(big);
      EXPECT_EQ(attach_first_row(small, n), big);
    }
  for (int k = 0; k <= 6; ++k)
    for (const auto& small : enumerate_partitions(k))
      for (int n = std::max(k, 1); n <= 12; ++n)
        if (can_attach_first_row(small, n)) EXPECT_EQ(strip_first_row(attach_first_row(small, n)), small);
}

TEST(Partition, LongFirstRow) {
  EXPECT_TRUE(has_long_first_row({5, 1}));
  EXPECT_FALSE(has_long_first_row({2, 2, 2}));
  EXPECT_TRUE(has_long_first_row({3, 3}));
  for (int n = 1; n <= 12; ++n)
    for (const auto& big : enumerate_partitions(n))
      EXPECT_EQ(has_long_first_row(big), strip_first_row(big).size() <= (n + 1) / 2) << to_string(big);
}

TEST(Partition, ConjugacyClasses) {
  const auto three = conjugacy_classes(3);
  ASSERT_EQ(three.size(), 3u);
  std::map<Partition, Integer> sizes;
  for (const auto& c : three) sizes[c.cycle_type] = c.class_size;
  EXPECT_EQ(sizes[Partition({3})], 2);
  EXPECT_EQ(sizes[Partition({2, 1})], 3);
  EXPECT_EQ(sizes[Partition({1, 1, 1})], 1);

  const auto one = conjugacy_classes(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].class_size, 1);
  EXPECT_EQ(class_size({2, 2}), 3);
}

TEST(Partition, ClassSizesMatchBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    const auto brute = brute_force_class_sizes(n);
    for (const auto& c : conjugacy_classes(n)) EXPECT_EQ(c.class_size, brute.at(c.cycle_type));
  }
}

TEST(Partition, ClassSizesSumToFactorial) {
  for (int n = 1; n <= 12; ++n) {
    Integer total = 0;
    for (const auto& c : conjugacy_classes(n)) total += c.class_size;
    EXPECT_EQ(total, factorial(n));
  }
  // Past 64-bit range.
  Integer total = 0;
  for (const auto& c : conjugacy_classes(22)) total += c.class_size;
  EXPECT_EQ(total, factorial(22));
}

TEST(Partition, TextFormat) {
  EXPECT_EQ(to_string(Partition({5, 1})), "[5,1]");
  EXPECT_EQ(to_string(Partition{}), "[]");
  EXPECT_EQ(parse_partition("[5, 1]"), Partition({5, 1}));
  EXPECT_EQ(parse_partition("[]"), Partition{});
  EXPECT_THROW(parse_partition("5,1"), DomainError);
  EXPECT_THROW(parse_partition("[1,2]"), DomainError);
  EXPECT_THROW(parse_partition("[a]"), DomainError);
  EXPECT_THROW(parse_partition("[1,,1]"), DomainError);
  for (int n = 0; n <= 8; ++n)
    for (const auto& p : enumerate_partitions(n)) EXPECT_EQ(parse_partition(to_string(p)), p);
}

TEST(Partition, HookLengthDimension) {
  EXPECT_EQ(dimension({2, 1}), 2);
  EXPECT_EQ(dimension({3, 2}), 5);
  EXPECT_EQ(dimension({4, 4, 4}), 462);
  EXPECT_EQ(dimension(Partition{}), 1);
}
