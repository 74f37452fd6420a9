#pragma once

// Secant varieties of the rational normal curve through apolarity.
//
// A degree-k operator q(d/dx, d/dy) = sum_j b_j (d/dx)^(k-j) (d/dy)^j is stored
// as the binary form sum_j b_j x^(k-j) y^j. The pairing is literal
// differentiation with no binomial renormalization, so the catalecticant of
// p = sum_i a_i x^(n-i) y^i in degree k has entries
//
//   C[m][j] = a_{m+j} * (n-m-j)!/(n-k-m)! * (m+j)!/m!,   0 <= m <= n-k, 0 <= j <= k,
//
// row m indexing the output monomial x^(n-k-m) y^m. The kernel is the space of
// degree-k annihilators of p. The operator b x - a y kills (a x + b y)^n, so
// the zeros (a : b) of a squarefree annihilator are the points of a secant plane.

#include "kronsec/binary_form.hpp"
#include "kronsec/complex.hpp"
#include "kronsec/matrix.hpp"
#include "kronsec/numeric.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace kronsec {

inline constexpr int kDefaultPrecisionBits = 96;
inline constexpr int kDefaultSampleAttempts = 32;
inline constexpr int kDefaultSampleHeight = 12;

struct CatalecticantMatrix {
  int source_degree = 0;  // k
  int target_degree = 0;  // n - k
  RationalMatrix entries;  // (n-k+1) x (k+1)
};

inline CatalecticantMatrix catalecticant(const BinaryForm& p, int k) {
  const int n = p.degree();
  if (k < 1 || k > n)
    throw DomainError("catalecticant: k = " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  CatalecticantMatrix c{k, n - k, RationalMatrix(static_cast<std::size_t>(n - k) + 1, static_cast<std::size_t>(k) + 1)};
  for (int m = 0; m <= n - k; ++m)
    for (int j = 0; j <= k; ++j) {
      const Rational& a = p[m + j];
      if (a == 0) continue;
      const Integer scale = (factorial(n - m - j) / factorial(n - k - m)) * (factorial(m + j) / factorial(m));
      c.entries(static_cast<std::size_t>(m), static_cast<std::size_t>(j)) = a * Rational(scale);
    }
  return c;
}

// Applies q(d/dx, d/dy) to p. Used to certify annihilators independently of the matrix.
inline BinaryForm apply_operator(const BinaryForm& q, const BinaryForm& p) {
  const int k = q.degree(), n = p.degree();
  if (k > n) return BinaryForm::zero(0);
  std::vector<Rational> out(static_cast<std::size_t>(n - k) + 1);
  for (int j = 0; j <= k; ++j) {
    if (q[j] == 0) continue;
    for (int i = 0; i <= n; ++i) {
      if (p[i] == 0) continue;
      const int xdeg = n - i, ydeg = i;
      const int dx = k - j, dy = j;
      if (xdeg < dx || ydeg < dy) continue;
      const Integer scale = (factorial(xdeg) / factorial(xdeg - dx)) * (factorial(ydeg) / factorial(ydeg - dy));
      out[static_cast<std::size_t>(ydeg - dy)] += q[j] * p[i] * Rational(scale);
    }
  }
  return BinaryForm(std::move(out));
}

// Degree-k annihilators of p, as primitive integer forms.
inline std::vector<BinaryForm> apolar_kernel(const BinaryForm& p, int k) {
  std::vector<BinaryForm> out;
  for (auto& v : kernel(catalecticant(p, k).entries)) out.emplace_back(primitive(std::move(v)));
  return out;
}

inline int kernel_dimension(const BinaryForm& p, int k) {
  const auto c = catalecticant(p, k);
  return static_cast<int>(c.entries.cols() - rank(c.entries));
}

// p lies on the cone over Sec^k iff some degree-k operator annihilates it.
inline bool secant_membership(const BinaryForm& p, int k) {
  if (p.is_zero()) throw DomainError("secant_membership: the zero form is the cone vertex");
  return kernel_dimension(p, k) > 0;
}

// Smallest k >= 1 with a nonzero degree-k annihilator; always <= n/2 + 1.
inline int minimal_annihilator_degree(const BinaryForm& p) {
  if (p.is_zero()) throw DomainError("minimal_annihilator_degree: zero form");
  for (int k = 1; k <= p.degree(); ++k)
    if (kernel_dimension(p, k) > 0) return k;
  throw ConsistencyError("minimal_annihilator_degree: no annihilator up to the degree");
}

struct SupportPoint {
  bool exact = true;
  ProjectivePoint point;       // exact case
  std::string re, im;          // numeric case: the point (re + i im : 1)
  double radius = 0;           // certified enclosure radius, 0 when exact
};

struct DecompositionCoefficient {
  bool exact = true;
  Rational value;
  std::string re, im;
};

struct SecantCertificate {
  BinaryForm form;
  int k = 0;                // smallest annihilator degree
  int kernel_dimension = 0; // nullity at degree k
  bool member = false;      // p lies on a k-secant plane through k distinct points
  int rank = 0;             // Waring rank by Sylvester's theorem
  std::optional<BinaryForm> annihilator;
  std::optional<std::vector<SupportPoint>> support;
  std::vector<DecompositionCoefficient> coefficients;  // p = sum c_i l_i^n, aligned with support
  bool exact = true;        // support and coefficients are exact rationals
  double error_bound = 0;   // max coefficient residual in the numeric case
};

namespace detail {

using Real = boost::multiprecision::mpfr_float;
using HpComplex = Complex<Real>;

class PrecisionScope {
 public:
  explicit PrecisionScope(int bits) : saved_(Real::default_precision()) {
    Real::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
  }
  ~PrecisionScope() { Real::default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

inline Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.backend().data(), MPFR_RNDN);
  return r;
}

// Exact value of a binary floating-point number.
inline Rational to_rational(const Real& x) {
  Integer mantissa;
  const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.backend().data(), x.backend().data());
  Rational r(mantissa);
  Integer p2 = 1;
  p2 <<= static_cast<unsigned>(e < 0 ? -e : e);
  return e < 0 ? Rational(r / p2) : Rational(r * p2);
}

inline std::string format(const Real& x, int bits) {
  return x.str(static_cast<std::streamsize>(bits * 0.30103) + 3, std::ios_base::scientific);
}

inline std::size_t bit_length(const Integer& z) { return z == 0 ? 0 : msb(abs(z)) + 1; }

// Integer coefficients with no common factor, same roots.
inline std::vector<Integer> integral(const UniPoly& f) {
  std::vector<Rational> scaled = primitive(f);
  std::vector<Integer> out;
  for (const auto& c : scaled) out.push_back(numerator(c));
  return out;
}

inline std::vector<HpComplex> to_complex(const UniPoly& f) {
  std::vector<HpComplex> c;
  for (const auto& x : f) c.emplace_back(to_real(x));
  return c;
}

// Continued-fraction convergents of x with denominator at most `max_den`,
// returned in order of increasing denominator.
inline std::vector<Rational> convergents(const Rational& x, const Integer& max_den) {
  std::vector<Rational> out;
  Integer h_prev = 0, h = 1, k_prev = 1, k = 0;
  Integer num = numerator(x), den = denominator(x);
  for (int step = 0; step < 4096 && den != 0; ++step) {
    Integer a = num / den;
    if (num < 0 && a * den != num) a -= 1;  // floor
    const Integer h_next = a * h + h_prev, k_next = a * k + k_prev;
    if (k_next > max_den) break;
    out.emplace_back(h_next, k_next);
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    const Integer rem = num - a * den;
    num = den;
    den = rem;
  }
  return out;
}

// Rational roots of f, found by rationalizing high-precision approximations;
// each candidate is verified exactly. f is deflated in place.
inline std::vector<Rational> extract_rational_roots(UniPoly& f, int precision_bits) {
  std::vector<Rational> found;
  while (poly::degree(f) >= 1) {
    if (poly::degree(f) == 1) {
      found.push_back(-f[0] / f[1]);
      f = UniPoly{f[1]};
      break;
    }
    const auto ints = integral(f);
    std::size_t height = 0;
    for (const auto& c : ints) height = std::max(height, bit_length(c));
    const Integer lead = abs(ints.back());
    // Legendre: a root u/v, v | lead, shows up as a convergent once the
    // approximation error drops below 1/(2 lead^2).
    const int bits = precision_bits + 2 * static_cast<int>(bit_length(lead)) + 4 * static_cast<int>(height) + 64;
    PrecisionScope scope(bits);
    const auto coeffs = to_complex(f);
    std::vector<HpComplex> roots;
    Real tol = boost::multiprecision::ldexp(Real(1), -(bits - 16));
    aberth_roots<Real>(coeffs, roots, tol, 4000);
    bool progress = false;
    for (const auto& z : roots) {
      const Real scale = abs(z.re) + 1;
      if (abs(z.im) > boost::multiprecision::ldexp(scale, -bits / 3)) continue;
      for (const auto& cand : convergents(to_rational(z.re), lead)) {
        if (poly::evaluate(f, cand) != 0) continue;
        found.push_back(cand);
        f = poly::divide_exact(f, UniPoly{-cand, Rational(1)});
        progress = true;
        break;
      }
      if (progress) break;
    }
    if (!progress) break;
  }
  return found;
}

struct NumericRoots {
  std::vector<HpComplex> roots;
  std::vector<Real> radii;
  int bits = 0;
};

// Roots of a squarefree f with Weierstrass-disc certificates of radius
// <= 2^-precision_bits. Precision is doubled up to four times.
inline NumericRoots certified_roots(const UniPoly& f, int precision_bits) {
  int bits = 2 * precision_bits + 64;
  for (int attempt = 0; attempt < 4; ++attempt, bits *= 2) {
    PrecisionScope scope(bits);
    const auto coeffs = to_complex(f);
    NumericRoots out;
    out.bits = bits;
    aberth_roots<Real>(coeffs, out.roots, boost::multiprecision::ldexp(Real(1), -(bits - 16)), 4000);
    out.radii = weierstrass_radii<Real>(coeffs, out.roots);
    const Real floor_radius = boost::multiprecision::ldexp(Real(1), -precision_bits);
    bool ok = true;
    for (std::size_t i = 0; i < out.roots.size() && ok; ++i) {
      if (!(out.radii[i] <= floor_radius)) ok = false;
      for (std::size_t j = i + 1; j < out.roots.size() && ok; ++j)
        if (abs(out.roots[i] - out.roots[j]) <= out.radii[i] + out.radii[j]) ok = false;
    }
    if (ok) return out;
  }
  throw ContinuationError("sylvester_decompose: root isolation failed to reach 2^-" + std::to_string(precision_bits));
}

inline bool solve_exact_coefficients(const BinaryForm& p, const std::vector<ProjectivePoint>& points,
                                     std::vector<Rational>& c) {
  const int n = p.degree();
  RationalMatrix m(static_cast<std::size_t>(n) + 1, points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const BinaryForm power = BinaryForm::power_of_linear(points[i].alpha, points[i].beta, n);
    for (int r = 0; r <= n; ++r) m(static_cast<std::size_t>(r), i) = power[r];
  }
  return solve(m, p.coeffs(), c);
}

}  // namespace detail

// Sylvester's algorithm. Finds the smallest annihilator degree k; a squarefree
// annihilator gives rank k with its zeros as support and exact (or certified
// numeric) coefficients; otherwise the rank is n - k + 2 and no support exists.
inline SecantCertificate sylvester_decompose(const BinaryForm& p, int precision_bits = kDefaultPrecisionBits) {
  if (p.is_zero()) throw DomainError("sylvester_decompose: zero form");
  if (precision_bits < 53) throw DomainError("sylvester_decompose: precision must be at least 53 bits");
  const int n = p.degree();
  SecantCertificate cert;
  cert.form = p;
  cert.k = minimal_annihilator_degree(p);
  const auto basis = apolar_kernel(p, cert.k);
  cert.kernel_dimension = static_cast<int>(basis.size());

  std::optional<BinaryForm> squarefree;
  if (basis.size() == 1) {
    if (is_squarefree(basis[0])) squarefree = basis[0];
  } else {
    // A pencil of coprime annihilators: a generic member is squarefree.
    for (int t = 0; t <= 4 * cert.k + 8 && !squarefree; ++t) {
      BinaryForm candidate = basis[1] + Rational(t) * basis[0];
      if (is_squarefree(candidate)) squarefree = BinaryForm(primitive(candidate.coeffs()));
    }
  }
  if (!squarefree) {
    cert.annihilator = basis[0];
    cert.member = false;
    cert.rank = n - cert.k + 2;
    return cert;
  }
  cert.annihilator = *squarefree;
  cert.member = true;
  cert.rank = cert.k;

  // Zeros of the annihilator: (1 : 0) when y divides it, then roots of q(t, 1).
  const BinaryForm& q = *squarefree;
  std::vector<ProjectivePoint> exact_points;
  if (q[0] == 0) exact_points.push_back(ProjectivePoint::infinity());
  UniPoly f = dehomogenize(q);
  for (const auto& t : detail::extract_rational_roots(f, precision_bits)) exact_points.push_back(ProjectivePoint::make(t, 1));
  std::sort(exact_points.begin(), exact_points.end());

  if (poly::degree(f) < 1) {
    std::vector<Rational> c;
    if (!detail::solve_exact_coefficients(p, exact_points, c))
      throw ConsistencyError("sylvester_decompose: support does not reconstruct the form");
    BinaryForm rebuilt = BinaryForm::zero(n);
    for (std::size_t i = 0; i < c.size(); ++i)
      rebuilt = rebuilt + c[i] * BinaryForm::power_of_linear(exact_points[i].alpha, exact_points[i].beta, n);
    if (rebuilt != p) throw ConsistencyError("sylvester_decompose: exact reconstruction mismatch");
    std::vector<SupportPoint> support;
    for (std::size_t i = 0; i < c.size(); ++i) {
      support.push_back({true, exact_points[i], "", "", 0.0});
      cert.coefficients.push_back({true, c[i], "", ""});
    }
    cert.support = std::move(support);
    cert.exact = true;
    return cert;
  }

  // Irrational zeros remain.
  const auto numeric = detail::certified_roots(f, precision_bits);
  detail::PrecisionScope scope(numeric.bits);
  using detail::HpComplex;
  using detail::Real;
  std::vector<SupportPoint> support;
  std::vector<HpComplex> nodes;  // t for (t : 1); infinity handled by flag
  std::vector<bool> at_infinity;
  for (const auto& pt : exact_points) {
    support.push_back({true, pt, "", "", 0.0});
    at_infinity.push_back(pt.is_infinity());
    nodes.emplace_back(pt.is_infinity() ? Real(0) : detail::to_real(pt.alpha));
  }
  for (std::size_t i = 0; i < numeric.roots.size(); ++i) {
    SupportPoint sp;
    sp.exact = false;
    sp.re = detail::format(numeric.roots[i].re, precision_bits);
    sp.im = detail::format(numeric.roots[i].im, precision_bits);
    sp.radius = numeric.radii[i].convert_to<double>();
    support.push_back(std::move(sp));
    at_infinity.push_back(false);
    nodes.push_back(numeric.roots[i]);
  }

  // Column i holds the coefficients of (t_i x + y)^n (or x^n at infinity).
  const std::size_t rows = static_cast<std::size_t>(n) + 1, cols = nodes.size();
  std::vector<std::vector<HpComplex>> a(rows, std::vector<HpComplex>(cols + 1));
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (at_infinity[i]) {
        a[r][i] = HpComplex(Real(r == 0 ? 1 : 0));
        continue;
      }
      HpComplex v(detail::to_real(Rational(binomial(n, static_cast<int>(r)))));
      for (std::size_t e = 0; e < rows - 1 - r; ++e) v = v * nodes[i];
      a[r][i] = v;
    }
  }
  for (std::size_t r = 0; r < rows; ++r) a[r][cols] = HpComplex(detail::to_real(p[static_cast<int>(r)]));
  const auto system = a;
  // Gaussian elimination with partial pivoting over the tall system.
  std::vector<std::size_t> pivot_rows;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t best = c;
    for (std::size_t r = c; r < rows; ++r)
      if (norm(a[r][c]) > norm(a[best][c])) best = r;
    std::swap(a[c], a[best]);
    for (std::size_t r = c + 1; r < rows; ++r) {
      const HpComplex f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= cols; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<HpComplex> coeff(cols);
  for (std::size_t c = cols; c-- > 0;) {
    HpComplex s = a[c][cols];
    for (std::size_t j = c + 1; j < cols; ++j) s -= a[c][j] * coeff[j];
    coeff[c] = s / a[c][c];
  }
  Real residual = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    HpComplex s;
    for (std::size_t i = 0; i < cols; ++i) s += system[r][i] * coeff[i];
    const Real e = abs(s - system[r][cols]);
    if (e > residual) residual = e;
  }
  for (const auto& c : coeff)
    cert.coefficients.push_back({false, Rational(0), detail::format(c.re, precision_bits), detail::format(c.im, precision_bits)});
  cert.support = std::move(support);
  cert.exact = false;
  cert.error_bound = residual.convert_to<double>();
  return cert;
}

// Rank of the moment matrix with rows (beta^n, beta^(n-1) alpha, ..., alpha^n),
// i.e. (1, t, ..., t^n) for (t : 1) and (0, ..., 0, 1) at infinity.
inline int vandermonde_rank(const std::vector<ProjectivePoint>& nodes, int n) {
  if (n < 0) throw DomainError("vandermonde_rank: negative degree");
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i] == nodes[j]) throw DomainError("vandermonde_rank: repeated node " + to_string(nodes[i]));
  RationalMatrix m(nodes.size(), static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int e = 0; e <= n; ++e)
      m(i, static_cast<std::size_t>(e)) = pow(nodes[i].beta, n - e) * pow(nodes[i].alpha, e);
  return static_cast<int>(rank(m));
}

struct JoinReport {
  int a = 0, b = 0, c = 0;  // smallest annihilator degrees of p, q, p + q
  bool sum_is_zero = false;
};

// q1 q2 kills p + q whenever q1 kills p and q2 kills q, hence c <= a + b.
inline JoinReport join_rank_check(const BinaryForm& p, const BinaryForm& q) {
  if (p.degree() != q.degree())
    throw DomainError("join_rank_check: degrees differ (" + std::to_string(p.degree()) + " vs " +
                      std::to_string(q.degree()) + ")");
  JoinReport r;
  r.a = minimal_annihilator_degree(p);
  r.b = minimal_annihilator_degree(q);
  const BinaryForm sum = p + q;
  if (sum.is_zero()) {
    r.sum_is_zero = true;
    return r;
  }
  r.c = minimal_annihilator_degree(sum);
  if (r.c > r.a + r.b) throw ConsistencyError("join_rank_check: annihilator degree of the sum exceeds a + b");
  return r;
}

struct SampledForm {
  BinaryForm form;
  std::vector<ProjectivePoint> points;  // sorted
  std::vector<Rational> weights;        // aligned with the generation order of points
  int resamples = 0;
};

// sum_{i<=k} c_i (alpha_i x + beta_i y)^n with distinct small-integer points and
// nonzero weights in [-5, 5], deterministic in the seed.
inline SampledForm sample_rank_k_form(int n, int k, std::uint64_t seed, int height = kDefaultSampleHeight,
                                      int max_attempts = kDefaultSampleAttempts) {
  if (k < 1 || 2 * k > n + 1)
    throw DomainError("sample_rank_k_form: need 1 <= k <= (n+1)/2, got n = " + std::to_string(n) + ", k = " +
                      std::to_string(k));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-height, height), weight(1, 5), sign(0, 1);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    SampledForm s;
    s.resamples = attempt;
    std::set<std::pair<Rational, Rational>> seen;
    while (static_cast<int>(s.points.size()) < k) {
      const int a = coord(rng), b = coord(rng);
      if (a == 0 && b == 0) continue;
      const ProjectivePoint pt = ProjectivePoint::make(a, b);
      if (!seen.insert({pt.alpha, pt.beta}).second) continue;
      s.points.push_back(pt);
      s.weights.emplace_back(sign(rng) ? weight(rng) : -weight(rng));
    }
    s.form = BinaryForm::zero(n);
    for (int i = 0; i < k; ++i)
      s.form = s.form + s.weights[static_cast<std::size_t>(i)] *
                            BinaryForm::power_of_linear(s.points[static_cast<std::size_t>(i)].alpha,
                                                        s.points[static_cast<std::size_t>(i)].beta, n);
    if (s.form.is_zero()) continue;
    if (kernel_dimension(s.form, k) != 1) continue;
    if (k > 1 && secant_membership(s.form, k - 1)) continue;
    std::vector<std::size_t> order(s.points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto x, auto y) { return s.points[x] < s.points[y]; });
    SampledForm sorted = s;
    for (std::size_t i = 0; i < order.size(); ++i) {
      sorted.points[i] = s.points[order[i]];
      sorted.weights[i] = s.weights[order[i]];
    }
    return sorted;
  }
  throw SamplingError("sample_rank_k_form: genericity check failed " + std::to_string(max_attempts) + " times");
}

}  // namespace kronsec
