#include "kronsec/brion.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace kronsec;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// (n-1,1) x Lambda by moving one box: Sigma = Lambda appears (corners - 1)
// times, every other diagram reachable by one move once.
std::int64_t standard_times(const Partition& big_lambda, const Partition& big_sigma) {
  auto rows = big_lambda.parts();
  rows.push_back(0);
  std::set<std::vector<int>> moved;
  int corners = 0;
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    if (rows[i] == rows[i + 1]) continue;
    ++corners;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i) continue;
      auto r = rows;
      --r[i];
      ++r[j];
      bool ok = true;
      for (std::size_t k = 0; k + 1 < r.size(); ++k) ok = ok && r[k] >= r[k + 1];
      if (!ok) continue;
      while (!r.empty() && r.back() == 0) r.pop_back();
      moved.insert(r);
    }
  }
  if (big_sigma == big_lambda) return corners - 1;
  return moved.count(big_sigma.parts()) ? 1 : 0;
}

std::string sweep_text(int n_max) {
  std::string out;
  const auto s = sweep(n_max, BrionClaims::both, [&](const BrionRecord& r) { out += to_jsonl(r) + "\n"; });
  return out + summary_jsonl(s, false) + "\n";
}

}  // namespace

TEST(Brion, VanishingExamples) {
  const auto recs = verify_vanishing(6, P({1}), P({1}));
  bool saw33 = false, saw222 = false;
  for (const auto& r : recs) {
    EXPECT_EQ(r.verdict, "vanishing-ok");
    EXPECT_FALSE(r.sigma.has_value());
    EXPECT_LT(r.big_sigma->first_row(), 4);
    saw33 |= *r.big_sigma == P({3, 3});
    saw222 |= *r.big_sigma == P({2, 2, 2});
  }
  EXPECT_TRUE(saw33 && saw222);
  const auto trivial = verify_vanishing(4, P({}), P({}));
  EXPECT_EQ(trivial.size(), 4u);  // every Sigma of 4 but (4)
  for (const auto& r : trivial) EXPECT_EQ(*r.kron, 0);
  EXPECT_EQ(to_jsonl(recs.front()).find("\"sigma\":\"below-threshold\"") != std::string::npos, true);
}

TEST(Brion, EqualityExamples) {
  const auto recs = verify_equality(6, P({1}), P({1}));
  ASSERT_EQ(recs.size(), 2u);
  EXPECT_EQ(*recs[0].big_sigma, P({4, 2}));
  EXPECT_EQ(*recs[0].kron, 1);
  EXPECT_EQ(*recs[0].lr, 1);
  EXPECT_EQ(*recs[1].big_sigma, P({4, 1, 1}));
  EXPECT_EQ(recs[1].verdict, "equality-ok");

  for (const auto& r : verify_equality(8, P({2}), P({1})))
    if (*r.sigma == P({3})) {
      EXPECT_EQ(*r.big_sigma, P({5, 3}));
      EXPECT_EQ(*r.kron, 1);
      EXPECT_EQ(*r.lr, 1);
    }
  for (int n = 1; n <= 9; ++n) {
    const auto e = verify_equality(n, P({}), P({}));
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(*e[0].big_sigma, P({n}));
    EXPECT_EQ(*e[0].kron, 1);
    EXPECT_EQ(*e[0].lr, 1);
  }
  EXPECT_EQ(to_jsonl(recs[0]),
            "{\"n\":6,\"lambda\":\"[1]\",\"omega\":\"[1]\",\"sigma\":\"[2]\",\"Sigma\":\"[4,2]\",\"kron\":1,\"lr\":1,"
            "\"verdict\":\"equality-ok\"}");
}

TEST(Brion, NoSigmaRecords) {
  // Inside the hypothesis every sigma attaches; past it some do not.
  int no_sigma = 0;
  boundary_scan(3, BrionClaims::equality, [&](const BrionRecord& r) {
    if (r.verdict == "no-Sigma") {
      ++no_sigma;
      EXPECT_FALSE(r.big_sigma.has_value());
      EXPECT_FALSE(r.kron.has_value());
      EXPECT_GT(r.sigma->first_row(), 3 - r.sigma->size());
    }
  });
  EXPECT_GT(no_sigma, 0);
}

TEST(Brion, HypothesisErrors) {
  EXPECT_THROW(verify_vanishing(5, P({2}), P({1})), DomainError);
  EXPECT_THROW(verify_equality(3, P({1}), P({1})), DomainError);
  try {
    verify_equality(5, P({2}), P({1}));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("|lambda| + |omega| <= n/2"), std::string::npos);
  }
  EXPECT_THROW(sweep(11, BrionClaims::both, [](const BrionRecord&) {}), CapacityError);
  EXPECT_THROW(parse_claims("all"), DomainError);
}

// omega = (1): kron against the box-moving rule for the standard representation.
TEST(Brion, StandardFactorAgainstBoxMoves) {
  for (int n = 2; n <= 9; ++n)
    for (const Partition& big_lambda : enumerate_partitions(n))
      for (const Partition& big_sigma : enumerate_partitions(n))
        EXPECT_EQ(kronecker(P({n - 1, 1}), big_lambda, big_sigma), standard_times(big_lambda, big_sigma))
            << to_string(big_lambda) << ' ' << to_string(big_sigma);
}

TEST(Brion, SweepHasNoViolations) {
  for (int n_max : {1, 6, 8}) {
    BrionSummary s = sweep(n_max, BrionClaims::both, [](const BrionRecord& r) {
      EXPECT_NE(r.verdict, "violation") << to_jsonl(r);
    });
    EXPECT_EQ(s.violations, 0);
    EXPECT_GT(s.records, 0);
    EXPECT_EQ(s.records, s.vanishing_ok + s.equality_ok + s.no_sigma);
  }
  // n_max = 1: only lambda = omega = (), one equality row for Sigma = (1).
  std::vector<BrionRecord> one;
  sweep(1, BrionClaims::both, [&](const BrionRecord& r) { one.push_back(r); });
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(*one[0].big_sigma, P({1}));
}

TEST(Brion, SweepIsDeterministic) { EXPECT_EQ(sweep_text(7), sweep_text(7)); }

TEST(Brion, ClaimSelection) {
  long v = 0, e = 0;
  const auto both = sweep(6, BrionClaims::both, [](const BrionRecord&) {});
  sweep(6, BrionClaims::vanishing, [&](const BrionRecord& r) { v += r.verdict == "vanishing-ok"; });
  sweep(6, BrionClaims::equality, [&](const BrionRecord& r) { e += r.verdict != "vanishing-ok"; });
  EXPECT_EQ(v, both.vanishing_ok);
  EXPECT_EQ(e, both.equality_ok + both.no_sigma);
}

// The sigma rows cover every sigma once, and sum lr dim(sigma) = C(a+b,a) dim lambda dim omega.
TEST(Brion, EqualityRowsAccountForInduction) {
  for (int n = 2; n <= 10; ++n)
    for_each_pair(
        n, [n](int a, int b) { return 2 * (a + b) <= n; },
        [&](const Partition& lambda, const Partition& omega) {
          const auto rows = verify_equality(n, lambda, omega);
          const int total = lambda.size() + omega.size();
          EXPECT_EQ(rows.size(), enumerate_partitions(total).size());
          long attachable = 0;
          Integer dims = 0;
          for (const auto& r : rows) {
            attachable += r.big_sigma.has_value();
            dims += dimension(*r.sigma) * *r.lr;
          }
          long expected = 0;
          for (const auto& s : enumerate_partitions(total)) expected += can_attach_first_row(s, n);
          EXPECT_EQ(attachable, expected);
          EXPECT_EQ(dims, binomial(total, lambda.size()) * dimension(lambda) * dimension(omega));
        });
}

TEST(Brion, BoundaryExamplesEmitRecords) {
  auto count_pair = [](int n, const Partition& l, const Partition& o) {
    long c = 0;
    boundary_scan(n, BrionClaims::both, [&](const BrionRecord& r) {
      if (r.lambda == l && r.omega == o) ++c;
      EXPECT_TRUE(r.verdict == "observed-holds" || r.verdict == "observed-fails" || r.verdict == "no-Sigma");
    });
    return c;
  };
  EXPECT_GT(count_pair(4, P({1}), P({2})), 0);
  EXPECT_GT(count_pair(5, P({2}), P({1})), 0);
  EXPECT_GT(count_pair(2, P({1}), P({1})), 0);
}
