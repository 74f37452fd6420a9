#pragma once

// Integer partitions in their three roles: Young diagrams, cycle types and
// labels of irreducible S_n representations.

#include "kronsec/numeric.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace kronsec {

class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1) throw DomainError("partition parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw DomainError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  // Sorts and drops zero parts; for cycle types assembled from pieces.
  static Partition from_unsorted(std::vector<int> parts) {
    std::erase_if(parts, [](int p) { return p == 0; });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int first_row() const { return parts_.empty() ? 0 : parts_.front(); }
  // Row length, zero past the last row.
  int row(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 0; j < first_row(); ++j) {
      int h = 0;
      while (h < length() && parts_[static_cast<std::size_t>(h)] > j) ++h;
      c.push_back(h);
    }
    return Partition(std::move(c));
  }

  // m_j: number of parts equal to j.
  std::map<int, int> multiplicities() const {
    std::map<int, int> m;
    for (int p : parts_) ++m[p];
    return m;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  // Lexicographic on parts; the canonical enumeration order is the reverse.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Bracket format: "[5,1]", "[]".
inline std::string to_string(const Partition& p) {
  std::string s = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.parts()[static_cast<std::size_t>(i)]);
  }
  return s + "]";
}

inline Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw DomainError("malformed partition '" + text + "': expected [a,b,...]");
  const std::string body = s.substr(1, s.size() - 2);
  std::vector<int> parts;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (true) {
      const auto comma = body.find(',', pos);
      const std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (tok.empty() || tok.size() > 6 || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw DomainError("malformed partition '" + text + "': bad part '" + tok + "'");
      parts.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  try {
    return Partition(std::move(parts));
  } catch (const DomainError& e) {
    throw DomainError("malformed partition '" + text + "': " + e.what());
  }
}

namespace detail {
inline void enumerate_into(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    enumerate_into(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace detail

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
inline std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("enumerate_partitions: n must be non-negative, got " + std::to_string(n));
  std::vector<Partition> out;
  std::vector<int> prefix;
  detail::enumerate_into(n, n, prefix, out);
  return out;
}

// Lambda -> lambda: delete the first row.
inline Partition strip_first_row(const Partition& big) {
  if (big.empty()) throw DomainError("strip_first_row: empty partition has no first row");
  return Partition(std::vector<int>(big.parts().begin() + 1, big.parts().end()));
}

// lambda -> (n - |lambda|, lambda). Requires n - |lambda| >= lambda_1.
inline Partition attach_first_row(const Partition& small, int n) {
  const int row = n - small.size();
  if (row < small.first_row())
    throw DomainError("attach_first_row: need n - |lambda| >= lambda_1, but " + std::to_string(n) + " - " +
                      std::to_string(small.size()) + " = " + std::to_string(row) + " < " +
                      std::to_string(small.first_row()));
  if (row == 0) return small;  // only reachable for n = 0, lambda = ()
  std::vector<int> parts{row};
  parts.insert(parts.end(), small.parts().begin(), small.parts().end());
  return Partition(std::move(parts));
}

inline bool can_attach_first_row(const Partition& small, int n) { return n - small.size() >= small.first_row(); }

// Lambda_1 >= (|Lambda| - 1) / 2, compared in integers.
inline bool has_long_first_row(const Partition& big) {
  if (big.empty()) throw DomainError("has_long_first_row: empty partition");
  return 2 * big.first_row() >= big.size() - 1;
}

struct CycleClass {
  Partition cycle_type;
  Integer class_size;
};

// n! / prod_j (j^{m_j} m_j!)
inline Integer class_size(const Partition& cycle_type) {
  Integer denom = 1;
  for (const auto& [part, mult] : cycle_type.multiplicities()) {
    for (int i = 0; i < mult; ++i) denom *= part;
    denom *= factorial(mult);
  }
  return factorial(cycle_type.size()) / denom;
}

// One class per partition of n, ordered identity class first (reverse of the
// partition enumeration order).
inline std::vector<CycleClass> conjugacy_classes(int n) {
  if (n < 1) throw DomainError("conjugacy_classes: n must be at least 1");
  auto parts = enumerate_partitions(n);
  std::vector<CycleClass> out;
  out.reserve(parts.size());
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) out.push_back({*it, class_size(*it)});
  return out;
}

// Hook-length formula.
inline Integer dimension(const Partition& shape) {
  const Partition conj = shape.conjugate();
  Integer hooks = 1;
  for (int i = 0; i < shape.length(); ++i)
    for (int j = 0; j < shape.row(i); ++j) hooks *= (shape.row(i) - j - 1) + (conj.row(j) - i - 1) + 1;
  return factorial(shape.size()) / hooks;
}

}  // namespace kronsec
