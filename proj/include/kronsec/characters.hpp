#pragma once

// Exact character theory of the symmetric groups: Murnaghan-Nakayama values,
// full character tables, Kronecker coefficients, Littlewood-Richardson
// coefficients by two independent routes, and Pieri decompositions.

#include "kronsec/numeric.hpp"
#include "kronsec/partition.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace kronsec {

inline constexpr int kDefaultCharacterCap = 14;

// Partition -> positive multiplicity. Iterates in canonical (reverse-lex) order.
using Multiset = std::map<Partition, std::int64_t, std::greater<>>;

namespace detail {

// A border strip of size r corresponds to moving one bead of the beta-set
// down by r; the sign is (-1)^(beads jumped over).
inline std::int64_t mn_recursive(const std::vector<int>& shape, const std::vector<int>& cycles, std::size_t next,
                                 std::map<std::vector<int>, std::int64_t>& memo) {
  if (next == cycles.size()) return 1;
  std::vector<int> key = shape;
  key.push_back(0);
  key.insert(key.end(), cycles.begin() + static_cast<std::ptrdiff_t>(next), cycles.end());
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const int len = static_cast<int>(shape.size());
  const int r = cycles[next];
  std::vector<int> beta(shape.size());
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int from = beta[static_cast<std::size_t>(i)];
    const int to = from - r;
    if (to < 0) continue;
    bool occupied = false;
    int jumped = 0;
    for (int b : beta) {
      if (b == to) occupied = true;
      if (b > to && b < from) ++jumped;
    }
    if (occupied) continue;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = to;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> smaller;
    for (int j = 0; j < len; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) smaller.push_back(part);
    }
    const std::int64_t sub = mn_recursive(smaller, cycles, next + 1, memo);
    total += (jumped % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace detail

// chi^shape at a permutation of the given cycle type.
inline std::int64_t mn_value(const Partition& shape, const Partition& cycle_type) {
  if (shape.size() != cycle_type.size())
    throw DomainError("mn_value: |lambda| = " + std::to_string(shape.size()) + " differs from |mu| = " +
                      std::to_string(cycle_type.size()));
  thread_local std::map<std::vector<int>, std::int64_t> memo;
  return detail::mn_recursive(shape.parts(), cycle_type.parts(), 0, memo);
}

class CharacterTable {
 public:
  explicit CharacterTable(int n, int cap = kDefaultCharacterCap) : n_(n) {
    if (n < 1) throw DomainError("character_table: n must be at least 1");
    if (n > cap)
      throw CapacityError("character_table: n = " + std::to_string(n) + " exceeds the configured cap " +
                          std::to_string(cap));
    irreducibles_ = enumerate_partitions(n);
    classes_ = conjugacy_classes(n);
    for (std::size_t i = 0; i < irreducibles_.size(); ++i) index_.emplace(irreducibles_[i], i);
    values_.assign(irreducibles_.size(), std::vector<std::int64_t>(classes_.size()));
    for (std::size_t i = 0; i < irreducibles_.size(); ++i)
      for (std::size_t j = 0; j < classes_.size(); ++j)
        values_[i][j] = mn_value(irreducibles_[i], classes_[j].cycle_type);
  }

  int n() const { return n_; }
  // Rows in reverse-lex order: (n) first.
  const std::vector<Partition>& irreducibles() const { return irreducibles_; }
  // Columns with the identity class first.
  const std::vector<CycleClass>& classes() const { return classes_; }
  const std::vector<std::vector<std::int64_t>>& values() const { return values_; }

  // Row index of a partition of n. Classes are indexed by count() - 1 - row_index.
  std::size_t row_index(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end())
      throw DomainError("partition " + to_string(p) + " is not a partition of " + std::to_string(n_));
    return it->second;
  }
  std::size_t class_index(const Partition& p) const { return classes_.size() - 1 - row_index(p); }
  std::size_t count() const { return irreducibles_.size(); }

  std::int64_t value(const Partition& shape, const Partition& cycle_type) const {
    return values_[row_index(shape)][class_index(cycle_type)];
  }

 private:
  int n_;
  std::vector<Partition> irreducibles_;
  std::vector<CycleClass> classes_;
  std::map<Partition, std::size_t> index_;
  std::vector<std::vector<std::int64_t>> values_;
};

// Shared, lazily built tables. The returned table is immutable.
inline std::shared_ptr<const CharacterTable> character_table(int n, int cap = kDefaultCharacterCap) {
  if (n > cap)
    throw CapacityError("character_table: n = " + std::to_string(n) + " exceeds the configured cap " +
                        std::to_string(cap));
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CharacterTable>(n, cap);
  return slot;
}

namespace detail {
inline void require_same_size(const char* op, std::initializer_list<const Partition*> ps) {
  const int n = (*ps.begin())->size();
  for (const Partition* p : ps)
    if (p->size() != n) throw DomainError(std::string(op) + ": partitions must all have the same size");
}

inline std::int64_t exact_quotient(const Integer& num, const Integer& den, const char* op) {
  if (num % den != 0) throw ConsistencyError(std::string(op) + ": character sum not divisible by group order");
  const Integer q = num / den;
  if (q < 0) throw ConsistencyError(std::string(op) + ": negative multiplicity");
  return q.convert_to<std::int64_t>();
}
}  // namespace detail

// [Sigma : Lambda (x) Omega] = (1/n!) sum_mu |C_mu| chi^Lambda chi^Omega chi^Sigma.
inline std::int64_t kronecker(const Partition& big_lambda, const Partition& big_omega, const Partition& big_sigma,
                              int cap = kDefaultCharacterCap) {
  detail::require_same_size("kronecker", {&big_lambda, &big_omega, &big_sigma});
  const int n = big_lambda.size();
  if (n == 0) return 1;
  const auto table = character_table(n, cap);
  const auto& a = table->values()[table->row_index(big_lambda)];
  const auto& b = table->values()[table->row_index(big_omega)];
  const auto& c = table->values()[table->row_index(big_sigma)];
  Integer sum = 0;
  for (std::size_t j = 0; j < table->classes().size(); ++j) {
    Integer term = a[j];
    term *= b[j];
    term *= c[j];
    sum += table->classes()[j].class_size * term;
  }
  return detail::exact_quotient(sum, factorial(n), "kronecker");
}

inline Multiset tensor_decompose(const Partition& big_lambda, const Partition& big_omega,
                                 int cap = kDefaultCharacterCap) {
  detail::require_same_size("tensor_decompose", {&big_lambda, &big_omega});
  Multiset out;
  if (big_lambda.size() == 0) {
    out[Partition{}] = 1;
    return out;
  }
  for (const Partition& s : enumerate_partitions(big_lambda.size()))
    if (const auto m = kronecker(big_lambda, big_omega, s, cap); m != 0) out[s] = m;
  return out;
}

namespace detail {

// Counts LR tableaux of shape outer/inner and content `content`: rows weakly
// increase, columns strictly increase, and the reverse reading word (rows top
// to bottom, each right to left) is a lattice word.
class LrCounter {
 public:
  LrCounter(const Partition& inner, const Partition& content, const Partition& outer)
      : inner_(inner), content_(content), outer_(outer) {
    for (int r = 0; r < outer.length(); ++r)
      for (int c = outer.row(r) - 1; c >= inner.row(r); --c) cells_.push_back({r, c});
    filling_.assign(static_cast<std::size_t>(outer.length()), std::vector<int>(static_cast<std::size_t>(outer.first_row()), 0));
    used_.assign(static_cast<std::size_t>(content.length()) + 1, 0);
  }

  std::int64_t count() { return place(0); }

 private:
  struct Cell {
    int row, col;
  };

  std::int64_t place(std::size_t idx) {
    if (idx == cells_.size()) return 1;
    const auto [r, c] = cells_[idx];
    // Weakly increasing rows: the cell to the right (already filled) bounds from above.
    int hi = content_.length();
    if (c + 1 < outer_.row(r)) hi = std::min(hi, at(r, c + 1));
    // Strict columns: the cell above, if in the skew shape, bounds from below.
    int lo = 1;
    if (r > 0 && c >= inner_.row(r - 1)) lo = at(r - 1, c) + 1;
    // Entries in row r are at most r + 1 for any lattice filling.
    hi = std::min(hi, r + 1);
    std::int64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      auto& u = used_[static_cast<std::size_t>(v)];
      if (u >= content_.row(v - 1)) continue;
      if (v > 1 && u + 1 > used_[static_cast<std::size_t>(v - 1)]) continue;
      ++u;
      filling_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
      total += place(idx + 1);
      --u;
    }
    return total;
  }

  int at(int r, int c) const { return filling_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }

  const Partition& inner_;
  const Partition& content_;
  const Partition& outer_;
  std::vector<Cell> cells_;
  std::vector<std::vector<int>> filling_;
  std::vector<int> used_;
};

inline void require_lr_sizes(const char* op, const Partition& a, const Partition& b, const Partition& s) {
  if (s.size() != a.size() + b.size())
    throw DomainError(std::string(op) + ": need |sigma| = |lambda| + |omega|, got " + std::to_string(s.size()) +
                      " vs " + std::to_string(a.size()) + " + " + std::to_string(b.size()));
}

}  // namespace detail

// c^sigma_{lambda,omega} by counting LR skew tableaux of shape sigma/lambda, content omega.
inline std::int64_t lr_coefficient(const Partition& lambda, const Partition& omega, const Partition& sigma) {
  detail::require_lr_sizes("lr_coefficient", lambda, omega, sigma);
  for (int r = 0; r < lambda.length(); ++r)
    if (lambda.row(r) > sigma.row(r)) return 0;
  return detail::LrCounter(lambda, omega, sigma).count();
}

// c^sigma_{lambda,omega} as <Res chi^sigma, chi^lambda x chi^omega> over S_a x S_b.
inline std::int64_t lr_by_characters(const Partition& lambda, const Partition& omega, const Partition& sigma) {
  detail::require_lr_sizes("lr_by_characters", lambda, omega, sigma);
  const int a = lambda.size(), b = omega.size();
  const auto left = enumerate_partitions(a);
  const auto right = enumerate_partitions(b);
  Integer sum = 0;
  for (const Partition& mu1 : left) {
    const std::int64_t x = mn_value(lambda, mu1);
    if (x == 0) continue;
    const Integer size1 = class_size(mu1);
    for (const Partition& mu2 : right) {
      const std::int64_t y = mn_value(omega, mu2);
      if (y == 0) continue;
      std::vector<int> joined = mu1.parts();
      joined.insert(joined.end(), mu2.parts().begin(), mu2.parts().end());
      const std::int64_t z = mn_value(sigma, Partition::from_unsorted(std::move(joined)));
      Integer term = x;
      term *= y;
      term *= z;
      sum += size1 * class_size(mu2) * term;
    }
  }
  return detail::exact_quotient(sum, factorial(a) * factorial(b), "lr_by_characters");
}

// Ind_{S_k x S_{n-k}}^{S_n}(lambda x triv): every sigma with sigma/lambda a
// horizontal strip of n - k boxes, multiplicity one.
inline Multiset pieri_decompose(const Partition& lambda, int n) {
  const int k = lambda.size();
  if (k > n)
    throw DomainError("pieri_decompose: |lambda| = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  Multiset out;
  const int len = lambda.length();
  std::vector<int> rows(static_cast<std::size_t>(len) + 1);
  // Interlacing: lambda_i <= sigma_i <= lambda_{i-1}, sigma_{len+1} <= lambda_len.
  std::function<void(int, int)> fill = [&](int i, int remaining) {
    if (i == len + 1) {
      if (remaining == 0) out[Partition::from_unsorted(rows)] = 1;
      return;
    }
    const int low = lambda.row(i);
    const int high = i == 0 ? low + remaining : std::min(lambda.row(i - 1), low + remaining);
    for (int s = low; s <= high; ++s) {
      rows[static_cast<std::size_t>(i)] = s;
      fill(i + 1, remaining - (s - low));
    }
  };
  fill(0, n - k);

  Integer total = 0;
  for (const auto& [s, m] : out) total += dimension(s) * m;
  if (total != binomial(n, k) * dimension(lambda))
    throw ConsistencyError("pieri_decompose: dimension count disagrees with C(n,k) dim(lambda)");
  return out;
}

// The unique Pieri summand with first row <= n - |lambda|: (n - |lambda|, lambda).
inline Partition pieri_distinguished(const Partition& lambda, int n) {
  const int k = lambda.size();
  if (2 * k > n + 1)
    throw DomainError("pieri_distinguished: need |lambda| <= (n+1)/2, got |lambda| = " + std::to_string(k) +
                      ", n = " + std::to_string(n));
  if (!can_attach_first_row(lambda, n))
    throw DomainError("pieri_distinguished: need n - |lambda| >= lambda_1 so that (n - |lambda|, lambda) is a diagram");
  const Multiset summands = pieri_decompose(lambda, n);
  const Partition* found = nullptr;
  for (const auto& [s, m] : summands) {
    if (s.first_row() > n - k) continue;
    if (found != nullptr || m != 1)
      throw ConsistencyError("pieri_distinguished: more than one summand meets the first-row bound");
    found = &s;
  }
  if (found == nullptr) throw ConsistencyError("pieri_distinguished: no summand meets the first-row bound");
  return *found;
}

}  // namespace kronsec
