#pragma once

// Binary forms sum_i a_i x^(n-i) y^i over Q, projective points of P^1, and
// the univariate polynomial arithmetic needed to factor them.

#include "kronsec/numeric.hpp"

#include <compare>
#include <string>
#include <vector>

namespace kronsec {

class BinaryForm {
 public:
  BinaryForm() = default;
  // coeffs[i] multiplies x^(n-i) y^i, so the degree is coeffs.size() - 1.
  explicit BinaryForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("binary form needs at least one coefficient");
  }

  static BinaryForm zero(int degree) { return BinaryForm(std::vector<Rational>(static_cast<std::size_t>(degree) + 1)); }

  // (alpha x + beta y)^n
  static BinaryForm power_of_linear(const Rational& alpha, const Rational& beta, int n) {
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i)
      c[static_cast<std::size_t>(i)] = Rational(binomial(n, i)) * pow(alpha, n - i) * pow(beta, i);
    return BinaryForm(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  Rational evaluate(const Rational& x, const Rational& y) const {
    Rational s = 0;
    const int n = degree();
    for (int i = 0; i <= n; ++i)
      if (coeffs_[static_cast<std::size_t>(i)] != 0) s += coeffs_[static_cast<std::size_t>(i)] * pow(x, n - i) * pow(y, i);
    return s;
  }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
    if (a.degree() != b.degree()) throw DomainError("adding binary forms of different degrees");
    std::vector<Rational> c = a.coeffs_;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return BinaryForm(std::move(c));
  }
  friend BinaryForm operator*(const Rational& s, const BinaryForm& a) {
    std::vector<Rational> c = a.coeffs_;
    for (auto& x : c) x *= s;
    return BinaryForm(std::move(c));
  }
  friend BinaryForm operator-(const BinaryForm& a) { return Rational(-1) * a; }

 private:
  std::vector<Rational> coeffs_;
};

// "deg=n; coeffs=a_0,a_1,...,a_n"
inline std::string to_string(const BinaryForm& f) {
  std::string s = "deg=" + std::to_string(f.degree()) + "; coeffs=";
  for (int i = 0; i <= f.degree(); ++i) {
    if (i) s += ',';
    s += f[i].str();
  }
  return s;
}

inline BinaryForm parse_binary_form(const std::string& text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  const auto semi = s.find(';');
  if (s.rfind("deg=", 0) != 0 || semi == std::string::npos || s.compare(semi + 1, 7, "coeffs=") != 0)
    throw DomainError("malformed binary form '" + text + "': expected 'deg=n; coeffs=a_0,...,a_n'");
  const std::string deg_text = s.substr(4, semi - 4);
  if (deg_text.empty() || deg_text.size() > 6 || deg_text.find_first_not_of("0123456789") != std::string::npos)
    throw DomainError("malformed binary form '" + text + "': bad degree");
  const int n = std::stoi(deg_text);
  if (n < 1) throw DomainError("malformed binary form '" + text + "': degree must be at least 1");
  std::vector<Rational> coeffs;
  const std::string body = s.substr(semi + 8);
  std::size_t pos = 0;
  while (true) {
    const auto comma = body.find(',', pos);
    coeffs.push_back(parse_rational(body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw DomainError("malformed binary form '" + text + "': degree " + std::to_string(n) + " needs " +
                      std::to_string(n + 1) + " coefficients, got " + std::to_string(coeffs.size()));
  return BinaryForm(std::move(coeffs));
}

// A point (alpha : beta) of P^1, normalized to (t : 1) or (1 : 0). It stands
// for the linear form alpha x + beta y, i.e. the curve point of (alpha x + beta y)^n.
struct ProjectivePoint {
  Rational alpha, beta;

  static ProjectivePoint make(const Rational& alpha, const Rational& beta) {
    if (beta != 0) return {alpha / beta, Rational(1)};
    if (alpha == 0) throw DomainError("(0 : 0) is not a projective point");
    return {Rational(1), Rational(0)};
  }
  static ProjectivePoint infinity() { return {Rational(1), Rational(0)}; }
  bool is_infinity() const { return beta == 0; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  // Finite points by value, infinity last.
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    if (a.is_infinity() != b.is_infinity()) return b.is_infinity();
    return a.alpha < b.alpha;
  }
};

inline std::string to_string(const ProjectivePoint& p) { return p.is_infinity() ? "inf" : p.alpha.str(); }

// "t" (a rational), "inf", or "a:b".
inline ProjectivePoint parse_projective_point(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "infinity") return ProjectivePoint::infinity();
  const auto colon = text.find(':');
  if (colon == std::string::npos) return ProjectivePoint::make(parse_rational(text), Rational(1));
  return ProjectivePoint::make(parse_rational(text.substr(0, colon)), parse_rational(text.substr(colon + 1)));
}

// Univariate polynomials over Q, coefficient of t^i at index i, no trailing zeros.
using UniPoly = std::vector<Rational>;

namespace poly {

inline void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int degree(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder of a / b, b nonzero.
inline UniPoly remainder(UniPoly a, const UniPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

// Exact quotient; throws if b does not divide a.
inline UniPoly divide_exact(UniPoly a, const UniPoly& b) {
  trim(a);
  if (a.size() < b.size()) throw ConsistencyError("divide_exact: divisor degree exceeds dividend");
  UniPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  if (!a.empty()) throw ConsistencyError("divide_exact: nonzero remainder");
  return q;
}

// Monic gcd.
inline UniPoly gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

inline Rational evaluate(const UniPoly& p, const Rational& t) {
  Rational s = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * t + *it;
  return s;
}

}  // namespace poly

// q(t, 1) as a univariate polynomial in t.
inline UniPoly dehomogenize(const BinaryForm& q) {
  const int k = q.degree();
  UniPoly f(static_cast<std::size_t>(k) + 1);
  for (int j = 0; j <= k; ++j) f[static_cast<std::size_t>(k - j)] = q[j];
  poly::trim(f);
  return f;
}

// Distinct linear factors over C: y^2 does not divide q and q(t,1) has no repeated root.
inline bool is_squarefree(const BinaryForm& q) {
  if (q.is_zero()) return false;
  if (q.degree() >= 2 && q[0] == 0 && q[1] == 0) return false;
  const UniPoly f = dehomogenize(q);
  if (f.size() <= 2) return true;
  return poly::degree(poly::gcd(f, poly::derivative(f))) == 0;
}

}  // namespace kronsec
