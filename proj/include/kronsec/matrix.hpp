#pragma once

#include "kronsec/numeric.hpp"

#include <string>
#include <vector>

namespace kronsec {

// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  bool is_identity() const { return rows_ == cols_ && *this == identity(rows_); }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& x = a(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) out(i, j) += x * b(k, j);
      }
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

// Gauss-Jordan elimination to reduced row echelon form.
inline EchelonForm row_reduce(RationalMatrix m) {
  EchelonForm out;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && m(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != pivot_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pivot_row, j));
    const Rational inv = 1 / m(pivot_row, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == pivot_row || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(pivot_row, j) != 0) m(i, j) -= f * m(pivot_row, j);
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

inline std::size_t rank(const RationalMatrix& m) { return row_reduce(m).rank(); }

// Right nullspace basis, one vector per free column (that coordinate set to 1).
inline std::vector<std::vector<Rational>> kernel(const RationalMatrix& m) {
  const EchelonForm ef = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ef.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i) v[ef.pivot_columns[i]] = -ef.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Scales a nonzero vector to coprime integers with a positive leading entry.
inline std::vector<Rational> primitive(std::vector<Rational> v) {
  Integer l = 1, g = 0;
  for (const auto& x : v)
    if (x != 0) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
  for (auto& x : v) {
    x *= l;
    g = boost::multiprecision::gcd(g, Integer(numerator(x)));
  }
  if (g == 0) return v;
  Rational sign = 1;
  for (const auto& x : v)
    if (x != 0) {
      sign = x < 0 ? -1 : 1;
      break;
    }
  for (auto& x : v) x = x * sign / g;
  return v;
}

// Solves A x = b; false when the system is inconsistent. Free variables are set to 0.
inline bool solve(const RationalMatrix& a, const std::vector<Rational>& b, std::vector<Rational>& x) {
  RationalMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const EchelonForm ef = row_reduce(aug);
  if (!ef.pivot_columns.empty() && ef.pivot_columns.back() == a.cols()) return false;
  x.assign(a.cols(), Rational(0));
  for (std::size_t i = 0; i < ef.pivot_columns.size(); ++i) x[ef.pivot_columns[i]] = ef.reduced(i, a.cols());
  return true;
}

}  // namespace kronsec
