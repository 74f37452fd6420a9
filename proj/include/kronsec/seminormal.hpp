#pragma once

// Young's seminormal form: exact rational matrices for the irreducible
// representations of S_n on the adjacent transpositions s_1, ..., s_{n-1}.
//
// Basis: standard tableaux in last-letter order. Tableau T precedes T' when
// the largest letter placed differently sits in a higher row of T.
//
// With r = c(i+1) - c(i) the axial distance (c = column - row), and T' = s_i T
// later than T:
//   s_i v_T  = (1/r) v_T + (1 - 1/r^2) v_T'
//   s_i v_T' = v_T - (1/r) v_T'
// and s_i acts by +1 / -1 when i, i+1 share a row / column.

#include "kronsec/matrix.hpp"
#include "kronsec/numeric.hpp"
#include "kronsec/partition.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace kronsec {

inline constexpr std::size_t kDefaultMaxRepDimension = 2000;

struct Box {
  int row, col;
  friend auto operator<=>(const Box&, const Box&) = default;
};

// boxes[j] is the box holding letter j + 1.
using StandardTableau = std::vector<Box>;

namespace detail {
inline void tableaux_into(std::vector<int>& rows, int letters, std::vector<StandardTableau>& out, StandardTableau& tail) {
  if (letters == 0) {
    StandardTableau t(tail.rbegin(), tail.rend());
    out.push_back(std::move(t));
    return;
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] == 0) continue;
    const bool corner = r + 1 == rows.size() || rows[r + 1] < rows[r];
    if (!corner) continue;
    --rows[r];
    tail.push_back({static_cast<int>(r), rows[r]});
    tableaux_into(rows, letters - 1, out, tail);
    tail.pop_back();
    ++rows[r];
  }
}
}  // namespace detail

inline std::vector<StandardTableau> standard_tableaux(const Partition& shape) {
  std::vector<int> rows = shape.parts();
  std::vector<StandardTableau> out;
  StandardTableau tail;
  detail::tableaux_into(rows, shape.size(), out, tail);
  // Built with letter n chosen first from the top row down, which sorts by
  // (row of n, row of n-1, ...): the last-letter order.
  return out;
}

class SeminormalRep {
 public:
  struct Entry {
    std::size_t row;
    Rational value;
  };
  // columns[a] lists the nonzero entries of column a.
  using SparseGenerator = std::vector<std::vector<Entry>>;

  SeminormalRep(const Partition& shape, std::size_t max_dimension = kDefaultMaxRepDimension) : shape_(shape) {
    if (shape.size() < 2) throw DomainError("build_rep: need |lambda| >= 2");
    const Integer dim = kronsec::dimension(shape);
    if (dim > max_dimension)
      throw CapacityError("build_rep: dimension " + dim.str() + " of " + to_string(shape) + " exceeds the bound " +
                          std::to_string(max_dimension));
    tableaux_ = standard_tableaux(shape);
    std::map<StandardTableau, std::size_t> index;
    for (std::size_t a = 0; a < tableaux_.size(); ++a) index.emplace(tableaux_[a], a);

    for (int i = 1; i < shape.size(); ++i) {
      SparseGenerator g(tableaux_.size());
      for (std::size_t a = 0; a < tableaux_.size(); ++a) {
        const Box x = tableaux_[a][static_cast<std::size_t>(i - 1)];
        const Box y = tableaux_[a][static_cast<std::size_t>(i)];
        if (x.row == y.row) {
          g[a].push_back({a, Rational(1)});
          continue;
        }
        if (x.col == y.col) {
          g[a].push_back({a, Rational(-1)});
          continue;
        }
        const Rational inv_r = Rational(1) / ((y.col - y.row) - (x.col - x.row));
        StandardTableau swapped = tableaux_[a];
        std::swap(swapped[static_cast<std::size_t>(i - 1)], swapped[static_cast<std::size_t>(i)]);
        const std::size_t b = index.at(swapped);
        g[a].push_back({a, inv_r});
        g[a].push_back({b, a < b ? 1 - inv_r * inv_r : Rational(1)});
      }
      generators_.push_back(std::move(g));
    }
  }

  const Partition& shape() const { return shape_; }
  int n() const { return shape_.size(); }
  std::size_t dimension() const { return tableaux_.size(); }
  const std::vector<StandardTableau>& tableaux() const { return tableaux_; }

  // Generator index i in [1, n-1].
  const SparseGenerator& sparse_generator(int i) const {
    check_index(i);
    return generators_[static_cast<std::size_t>(i - 1)];
  }

  RationalMatrix generator(int i) const {
    const auto& g = sparse_generator(i);
    RationalMatrix m(dimension(), dimension());
    for (std::size_t a = 0; a < g.size(); ++a)
      for (const auto& e : g[a]) m(e.row, a) = e.value;
    return m;
  }

  void check_index(int i) const {
    if (i < 1 || i >= n())
      throw DomainError("generator index " + std::to_string(i) + " outside [1, " + std::to_string(n() - 1) + "]");
  }

 private:
  Partition shape_;
  std::vector<StandardTableau> tableaux_;
  std::vector<SparseGenerator> generators_;
};

inline SeminormalRep build_rep(const Partition& shape, std::size_t max_dimension = kDefaultMaxRepDimension) {
  return SeminormalRep(shape, max_dimension);
}

// rho(s_{w_1}) rho(s_{w_2}) ... in word order.
inline RationalMatrix evaluate_word(const SeminormalRep& rep, std::span<const int> word) {
  for (int i : word) rep.check_index(i);
  const std::size_t d = rep.dimension();
  RationalMatrix acc = RationalMatrix::identity(d);
  for (int i : word) {
    const auto& g = rep.sparse_generator(i);
    RationalMatrix next(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& e : g[a])
        for (std::size_t r = 0; r < d; ++r)
          if (acc(r, e.row) != 0) next(r, a) += acc(r, e.row) * e.value;
    acc = std::move(next);
  }
  return acc;
}

// Image of b_1 ... b_{n-1} b_{n-1} ... b_1; the identity for every rep of S_n.
inline RationalMatrix spherical_relation_image(const SeminormalRep& rep) {
  std::vector<int> word;
  for (int i = 1; i < rep.n(); ++i) word.push_back(i);
  for (int i = rep.n() - 1; i >= 1; --i) word.push_back(i);
  return evaluate_word(rep, word);
}

struct RelationReport {
  bool involutions = true, braids = true, commutations = true, spherical = true;
  bool ok() const { return involutions && braids && commutations && spherical; }
};

// Coxeter relations of S_n and the spherical word, by exact multiplication.
inline RelationReport check_relations(const SeminormalRep& rep) {
  RelationReport r;
  const int n = rep.n();
  std::vector<RationalMatrix> g;
  for (int i = 1; i < n; ++i) g.push_back(rep.generator(i));
  for (int i = 0; i + 1 < n; ++i) {
    const auto& a = g[static_cast<std::size_t>(i)];
    if (!(a * a).is_identity()) r.involutions = false;
    for (int j = i + 1; j + 1 < n; ++j) {
      const auto& b = g[static_cast<std::size_t>(j)];
      if (j == i + 1) {
        if (!(a * b * a == b * a * b)) r.braids = false;
      } else if (!(a * b == b * a)) {
        r.commutations = false;
      }
    }
  }
  r.spherical = spherical_relation_image(rep).is_identity();
  return r;
}

// Permutation of {0..n-1} as images; composing s_{w_1} then s_{w_2} ... as maps
// applied right to left, matching the matrix product order of evaluate_word.
inline std::vector<int> word_permutation(int n, std::span<const int> word) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] = j;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int i = *it;
    for (auto& p : perm)
      if (p == i - 1)
        p = i;
      else if (p == i)
        p = i - 1;
  }
  return perm;
}

inline Partition cycle_type(const std::vector<int>& perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t j = s; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition::from_unsorted(std::move(lengths));
}

}  // namespace kronsec
