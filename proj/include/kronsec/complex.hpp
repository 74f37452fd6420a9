#pragma once

// Minimal complex arithmetic over an arbitrary real type (long double,
// float128, mpfr_float), plus simultaneous polynomial root refinement.

#include <cmath>
#include <span>
#include <vector>

namespace kronsec {

template <class Real>
struct Complex {
  Real re{0}, im{0};

  Complex() = default;
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

template <class Real>
Real norm(const Complex<Real>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class Real>
Real abs(const Complex<Real>& z) {
  using std::sqrt;
  return sqrt(norm(z));
}

template <class Real>
Complex<Real> polar(const Real& r, const Real& theta) {
  using std::cos;
  using std::sin;
  return {r * cos(theta), r * sin(theta)};
}

// Horner evaluation; coeffs[i] multiplies z^i.
template <class Real>
Complex<Real> horner(std::span<const Complex<Real>> coeffs, const Complex<Real>& z) {
  Complex<Real> s;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * z + *it;
  return s;
}

// Value and derivative in one pass.
template <class Real>
void horner_with_derivative(std::span<const Complex<Real>> coeffs, const Complex<Real>& z, Complex<Real>& value,
                            Complex<Real>& slope) {
  value = Complex<Real>();
  slope = Complex<Real>();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    slope = slope * z + value;
    value = value * z + *it;
  }
}

// Aberth-Ehrlich iteration for all roots of a polynomial with nonzero leading
// coefficient. Returns false if the iteration did not settle below `tol`
// within `max_iter` sweeps.
template <class Real>
bool aberth_roots(std::span<const Complex<Real>> coeffs, std::vector<Complex<Real>>& roots, const Real& tol,
                  int max_iter = 2000) {
  using std::pow;
  const std::size_t n = coeffs.size() - 1;
  roots.resize(n);
  if (n == 0) return true;
  // Cauchy bound for the initial circle.
  Real bound = 0;
  const Real lead = abs(coeffs[n]);
  for (std::size_t i = 0; i < n; ++i) {
    const Real r = abs(coeffs[i]) / lead;
    if (r > bound) bound = r;
  }
  bound = bound + 1;
  const Real two_pi = Real(2) * Real(3.14159265358979323846264338327950288L);
  for (std::size_t i = 0; i < n; ++i) {
    // Offset angle avoids symmetric starts on real-coefficient inputs.
    const Real angle = two_pi * (Real(static_cast<long>(i)) + Real(0.4L)) / Real(static_cast<long>(n));
    roots[i] = polar(bound * Real(0.5L), angle);
  }
  for (int iter = 0; iter < max_iter; ++iter) {
    Real worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Complex<Real> value, slope;
      horner_with_derivative(coeffs, roots[i], value, slope);
      if (norm(value) == 0) continue;
      const Complex<Real> ratio = value / slope;
      Complex<Real> repulsion;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) repulsion += Complex<Real>(Real(1)) / (roots[i] - roots[j]);
      const Complex<Real> step = ratio / (Complex<Real>(Real(1)) - ratio * repulsion);
      roots[i] -= step;
      const Real size = abs(step) / (abs(roots[i]) + Real(1));
      if (size > worst) worst = size;
    }
    if (worst < tol) return true;
  }
  return false;
}

// Weierstrass inclusion radii n |W_i|, W_i = f(z_i) / (lead prod_{j != i} (z_i - z_j)).
// When these discs are pairwise disjoint each holds exactly one root.
template <class Real>
std::vector<Real> weierstrass_radii(std::span<const Complex<Real>> coeffs, std::span<const Complex<Real>> roots) {
  const std::size_t n = roots.size();
  std::vector<Real> radii(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex<Real> denom = coeffs[n];
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) denom = denom * (roots[i] - roots[j]);
    radii[i] = Real(static_cast<long>(n)) * abs(horner(coeffs, roots[i]) / denom);
  }
  return radii;
}

}  // namespace kronsec
