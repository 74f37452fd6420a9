#pragma once

// Exhaustive checks of the stable Kronecker = Littlewood-Richardson identity
// for partitions with a long first row, and the matching vanishing statement.

#include "kronsec/characters.hpp"
#include "kronsec/partition.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace kronsec {

inline constexpr int kDefaultSweepCap = 10;

struct BrionRecord {
  int n = 0;
  Partition lambda, omega;
  std::optional<Partition> sigma;      // empty: "below-threshold"
  std::optional<Partition> big_sigma;  // empty: no Sigma for this sigma
  std::optional<std::int64_t> kron, lr;
  std::string verdict;
};

enum class BrionClaims { vanishing, equality, both };

inline BrionClaims parse_claims(const std::string& s) {
  if (s == "vanishing") return BrionClaims::vanishing;
  if (s == "equality") return BrionClaims::equality;
  if (s == "both") return BrionClaims::both;
  throw DomainError("unknown claim selector '" + s + "': expected vanishing, equality or both");
}

inline std::string to_jsonl(const BrionRecord& r) {
  auto opt_int = [](const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : std::string("null"); };
  std::string s = "{\"n\":" + std::to_string(r.n) + ",\"lambda\":\"" + to_string(r.lambda) + "\",\"omega\":\"" +
                  to_string(r.omega) + "\",\"sigma\":\"" + (r.sigma ? to_string(*r.sigma) : "below-threshold") + "\"";
  s += ",\"Sigma\":" + (r.big_sigma ? "\"" + to_string(*r.big_sigma) + "\"" : std::string("null"));
  s += ",\"kron\":" + opt_int(r.kron) + ",\"lr\":" + opt_int(r.lr) + ",\"verdict\":\"" + r.verdict + "\"}";
  return s;
}

struct BrionSummary {
  long records = 0, vanishing_ok = 0, equality_ok = 0, no_sigma = 0, violations = 0;
  long holds = 0, fails = 0;  // boundary scan only

  void add(const BrionRecord& r) {
    ++records;
    if (r.verdict == "vanishing-ok") ++vanishing_ok;
    else if (r.verdict == "equality-ok") ++equality_ok;
    else if (r.verdict == "no-Sigma") ++no_sigma;
    else if (r.verdict == "violation") ++violations;
    else if (r.verdict == "observed-holds") ++holds;
    else if (r.verdict == "observed-fails") ++fails;
  }
};

namespace detail {

inline void check_brion_hypothesis(int n, const Partition& lambda, const Partition& omega) {
  if (n < 1) throw DomainError("n must be >= 1, got " + std::to_string(n));
  const int total = lambda.size() + omega.size();
  if (2 * total > n)
    throw DomainError("hypothesis |lambda| + |omega| <= n/2 fails: " + std::to_string(total) + " > " +
                      std::to_string(n) + "/2");
  for (const Partition* p : {&lambda, &omega})
    if (!can_attach_first_row(*p, n))
      throw DomainError("n - |lambda| >= lambda_1 fails for " + to_string(*p) + " at n = " + std::to_string(n));
}

// Rows of the two claims with verdict strings supplied by the caller.
inline void vanishing_rows(int n, const Partition& lambda, const Partition& omega, int cap, const char* ok,
                           const char* bad, const std::function<void(BrionRecord)>& emit) {
  const Partition big_lambda = attach_first_row(lambda, n), big_omega = attach_first_row(omega, n);
  const int bound = n - lambda.size() - omega.size();
  for (const Partition& big_sigma : enumerate_partitions(n)) {
    if (big_sigma.first_row() >= bound) continue;
    BrionRecord r{n, lambda, omega, std::nullopt, big_sigma, kronecker(big_lambda, big_omega, big_sigma, cap),
                  std::nullopt, ""};
    r.verdict = *r.kron == 0 ? ok : bad;
    emit(std::move(r));
  }
}

inline void equality_rows(int n, const Partition& lambda, const Partition& omega, int cap, const char* ok,
                          const char* bad, const std::function<void(BrionRecord)>& emit) {
  const Partition big_lambda = attach_first_row(lambda, n), big_omega = attach_first_row(omega, n);
  for (const Partition& sigma : enumerate_partitions(lambda.size() + omega.size())) {
    BrionRecord r{n, lambda, omega, sigma, std::nullopt, std::nullopt, lr_coefficient(lambda, omega, sigma), ""};
    if (!can_attach_first_row(sigma, n)) {
      r.verdict = "no-Sigma";
    } else {
      r.big_sigma = attach_first_row(sigma, n);
      r.kron = kronecker(big_lambda, big_omega, *r.big_sigma, cap);
      r.verdict = *r.kron == *r.lr ? ok : bad;
    }
    emit(std::move(r));
  }
}

}  // namespace detail

// Every Sigma of n with first row below n - |lambda| - |omega| has kron = 0.
inline std::vector<BrionRecord> verify_vanishing(int n, const Partition& lambda, const Partition& omega,
                                                 int cap = kDefaultCharacterCap) {
  detail::check_brion_hypothesis(n, lambda, omega);
  std::vector<BrionRecord> out;
  detail::vanishing_rows(n, lambda, omega, cap, "vanishing-ok", "violation",
                         [&](BrionRecord r) { out.push_back(std::move(r)); });
  return out;
}

// kron(Lambda, Omega, Sigma) = c^sigma_{lambda,omega} for Sigma = (n - |sigma|, sigma).
inline std::vector<BrionRecord> verify_equality(int n, const Partition& lambda, const Partition& omega,
                                                int cap = kDefaultCharacterCap) {
  detail::check_brion_hypothesis(n, lambda, omega);
  std::vector<BrionRecord> out;
  detail::equality_rows(n, lambda, omega, cap, "equality-ok", "violation",
                        [&](BrionRecord r) { out.push_back(std::move(r)); });
  return out;
}

// Pairs (lambda, omega) in canonical order: |lambda| then lambda (reverse-lex),
// then |omega| then omega.
inline void for_each_pair(int n, const std::function<bool(int, int)>& sizes_ok,
                          const std::function<void(const Partition&, const Partition&)>& visit) {
  for (int a = 0; a <= n; ++a)
    for (const Partition& lambda : enumerate_partitions(a))
      for (int b = 0; b <= n; ++b) {
        if (!sizes_ok(a, b)) continue;
        for (const Partition& omega : enumerate_partitions(b))
          if (can_attach_first_row(lambda, n) && can_attach_first_row(omega, n)) visit(lambda, omega);
      }
}

// All n <= n_max inside the hypothesis; records streamed in canonical order.
inline BrionSummary sweep(int n_max, BrionClaims claims, const std::function<void(const BrionRecord&)>& emit,
                          int sweep_cap = kDefaultSweepCap, int cap = kDefaultCharacterCap) {
  if (n_max < 1) throw DomainError("n_max must be >= 1");
  if (n_max > sweep_cap || n_max > cap)
    throw CapacityError("sweep: n_max = " + std::to_string(n_max) + " exceeds the sweep cap " +
                        std::to_string(std::min(sweep_cap, cap)));
  BrionSummary summary;
  auto sink = [&](BrionRecord r) {
    summary.add(r);
    emit(r);
  };
  for (int n = 1; n <= n_max; ++n)
    for_each_pair(
        n, [n](int a, int b) { return 2 * (a + b) <= n; },
        [&](const Partition& lambda, const Partition& omega) {
          if (claims != BrionClaims::equality)
            detail::vanishing_rows(n, lambda, omega, cap, "vanishing-ok", "violation", sink);
          if (claims != BrionClaims::vanishing)
            detail::equality_rows(n, lambda, omega, cap, "equality-ok", "violation", sink);
        });
  return summary;
}

// Outside the hypothesis (n/2 < |lambda| + |omega|) with both diagrams still
// long in the first row. Observational: verdicts say what was seen.
inline BrionSummary boundary_scan(int n, BrionClaims claims, const std::function<void(const BrionRecord&)>& emit,
                                  int sweep_cap = kDefaultSweepCap, int cap = kDefaultCharacterCap) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (n > sweep_cap || n > cap)
    throw CapacityError("boundary_scan: n = " + std::to_string(n) + " exceeds the sweep cap " +
                        std::to_string(std::min(sweep_cap, cap)));
  BrionSummary summary;
  auto sink = [&](BrionRecord r) {
    summary.add(r);
    emit(r);
  };
  for_each_pair(
      n, [n](int a, int b) { return 2 * (a + b) > n && 2 * a <= n + 1 && 2 * b <= n + 1; },
      [&](const Partition& lambda, const Partition& omega) {
        if (claims != BrionClaims::equality)
          detail::vanishing_rows(n, lambda, omega, cap, "observed-holds", "observed-fails", sink);
        if (claims != BrionClaims::vanishing)
          detail::equality_rows(n, lambda, omega, cap, "observed-holds", "observed-fails", sink);
      });
  return summary;
}

inline std::string summary_jsonl(const BrionSummary& s, bool observational) {
  std::string out = "{\"summary\":true,\"records\":" + std::to_string(s.records);
  if (observational) {
    out += ",\"observed_holds\":" + std::to_string(s.holds) + ",\"observed_fails\":" + std::to_string(s.fails);
  } else {
    out += ",\"vanishing_ok\":" + std::to_string(s.vanishing_ok) + ",\"equality_ok\":" + std::to_string(s.equality_ok);
  }
  out += ",\"no_Sigma\":" + std::to_string(s.no_sigma);
  if (!observational) out += ",\"violations\":" + std::to_string(s.violations);
  return out + "}";
}

}  // namespace kronsec
