#pragma once

// Root monodromy of closed loops of squarefree univariate polynomials,
// tracked by predictor-corrector continuation in quad precision.
//
// Conventions: roots of the base are labelled 0..n-1 in (re, im) order.
// permutation[j] is the label of the base root where root j ends up. Paths
// concatenate left to right, so perm(p1 p2) = perm(p2) o perm(p1).

#include "kronsec/characters.hpp"
#include "kronsec/complex.hpp"
#include "kronsec/numeric.hpp"
#include "kronsec/seminormal.hpp"

#include <boost/multiprecision/float128.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace kronsec {

using QReal = boost::multiprecision::float128;
using QComplex = Complex<QReal>;
using QPoly = std::vector<QComplex>;  // coefficient of t^i at index i

struct TrackOptions {
  double tolerance = 1e-24;
  double max_step = 1.0 / 64;
  int floor_exponent = 20;
  int newton_iterations = 16;
};

// One closed piece of a loop: s in [0,1] -> coefficients, equal to the base at both ends.
struct LoopSegment {
  std::string label;
  std::function<QPoly(const QReal&)> coeffs;
};

struct TrackStats {
  long steps = 0;
  long halvings = 0;
  double min_step = 1;
  double min_gap = 0;
};

struct MonodromyLoop {
  QPoly base;
  std::vector<QComplex> roots;  // labelled base roots
  std::vector<std::string> segments;
  std::vector<int> permutation;
  TrackStats stats;
  double max_step = 0;
};

namespace detail {

inline const QReal& q_pi() {
  static const QReal pi = boost::multiprecision::acos(QReal(-1));
  return pi;
}

inline QComplex q_expi(const QReal& theta) { return {cos(theta), sin(theta)}; }

inline QReal min_gap(const std::vector<QComplex>& z) {
  QReal g = std::numeric_limits<QReal>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) g = std::min(g, abs(z[i] - z[j]));
  return g;
}

inline QPoly from_roots(const QComplex& lead, const std::vector<QComplex>& roots) {
  QPoly c{lead};
  for (const auto& r : roots) {
    QPoly next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= c[i] * r;
    }
    c = std::move(next);
  }
  return c;
}

inline bool root_order(const QComplex& a, const QComplex& b) {
  const QReal scale = 1 + std::max(abs(a), abs(b));
  if (abs(a.re - b.re) > QReal(1e-20) * scale) return a.re < b.re;
  return a.im < b.im;
}

inline std::string format_param(const QReal& s) {
  std::ostringstream os;
  os.precision(12);
  os << static_cast<double>(s);
  return os.str();
}

// Newton on p from z; false if it does not settle.
inline bool newton(const QPoly& p, QComplex& z, const QReal& tol, int iterations) {
  for (int it = 0; it < iterations; ++it) {
    QComplex value, slope;
    horner_with_derivative<QReal>(p, z, value, slope);
    if (norm(slope) == 0) return false;
    const QComplex delta = value / slope;
    z -= delta;
    if (abs(delta) <= tol * (1 + abs(z))) return true;
  }
  return false;
}

// One continuation step from p_cur (roots z) to p_next. Fills out and returns
// true when the matching is safe.
inline bool continuation_step(const QPoly& p_cur, const QPoly& p_next, const std::vector<QComplex>& z,
                              const QReal& gap, const TrackOptions& opt, std::vector<QComplex>& out) {
  const QReal tol = opt.tolerance;
  QPoly diff(p_next.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = p_next[i] - p_cur[i];
  out.resize(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    QComplex value, slope;
    horner_with_derivative<QReal>(p_cur, z[j], value, slope);
    if (norm(slope) == 0) return false;
    QComplex w = z[j] - horner<QReal>(diff, z[j]) / slope;
    const QComplex predicted = w;
    if (!newton(p_next, w, tol, opt.newton_iterations)) return false;
    if (abs(w - predicted) >= gap / 4) return false;
    if (abs(w - z[j]) >= gap / 2) return false;
    out[j] = w;
  }
  // Nearest-neighbour matching must agree with the continuation labels.
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t k = 0; k < z.size(); ++k)
      if (k != j && abs(out[j] - z[k]) <= abs(out[j] - z[j])) return false;
  return true;
}

inline void track_segment(const LoopSegment& seg, std::size_t seg_index, std::vector<QComplex>& z,
                          const TrackOptions& opt, TrackStats& stats) {
  const QReal max_step = opt.max_step;
  const QReal floor = ldexp(max_step, -opt.floor_exponent);
  QReal s = 0, h = max_step;
  QPoly cur = seg.coeffs(s);
  std::vector<QComplex> next_roots;
  while (s < 1) {
    const QReal gap = min_gap(z);
    stats.min_gap = std::min(stats.min_gap, static_cast<double>(gap));
    if (gap <= QReal(opt.tolerance))
      throw ContinuationError("root collision on segment " + std::to_string(seg_index) + " (" + seg.label +
                              ") at s = " + format_param(s));
    const QReal step = std::min(h, QReal(1) - s);
    const QReal t = step == QReal(1) - s ? QReal(1) : s + step;
    QPoly nxt = seg.coeffs(t);
    if (continuation_step(cur, nxt, z, gap, opt, next_roots)) {
      z.swap(next_roots);
      cur = std::move(nxt);
      s = t;
      ++stats.steps;
      stats.min_step = std::min(stats.min_step, static_cast<double>(step));
      h = std::min(step * 2, max_step);
    } else {
      ++stats.halvings;
      h = step / 2;
      if (h < floor)
        throw ContinuationError("step floor reached on segment " + std::to_string(seg_index) + " (" + seg.label +
                                ") at s = " + format_param(s) + ": path too close to the discriminant");
    }
  }
}

}  // namespace detail

// Base roots by Aberth iteration, polished and labelled; throws if not squarefree.
inline std::vector<QComplex> base_roots(const QPoly& base, const TrackOptions& opt = {}) {
  if (base.size() < 2 || norm(base.back()) == 0) throw DomainError("base polynomial needs degree >= 1 and a nonzero leading coefficient");
  std::vector<QComplex> roots;
  if (!aberth_roots<QReal>(base, roots, QReal(1e-30), 4000))
    throw ContinuationError("root finder did not converge on the base polynomial");
  for (auto& r : roots) detail::newton(base, r, QReal(opt.tolerance), opt.newton_iterations);
  if (roots.size() > 1 && detail::min_gap(roots) <= QReal(opt.tolerance) * 1e6)
    throw DomainError("base polynomial is not squarefree");
  std::sort(roots.begin(), roots.end(), detail::root_order);
  return roots;
}

// prod (t - j), j = 1..n.
inline QPoly real_rooted_base(int n) {
  std::vector<QComplex> roots;
  for (int j = 1; j <= n; ++j) roots.emplace_back(QReal(j));
  return detail::from_roots(QComplex(QReal(1)), roots);
}

// Exchange labelled roots i and i+1 (1-based) counterclockwise: contract the
// pair to a disc of radius a quarter of their gap, rotate by pi, expand back.
inline LoopSegment half_twist(const QPoly& base, const std::vector<QComplex>& roots, int i) {
  const int n = static_cast<int>(roots.size());
  if (i < 1 || i > n - 1)
    throw DomainError("half_twist(" + std::to_string(i) + "): index must lie in 1.." + std::to_string(n - 1));
  const QComplex a = roots[static_cast<std::size_t>(i - 1)], b = roots[static_cast<std::size_t>(i)];
  const QComplex mid = (a + b) * QComplex(QReal(0.5));
  const QComplex half = (b - a) * QComplex(QReal(0.5));
  const QReal reach = abs(half);
  for (int j = 0; j < n; ++j)
    if (j != i - 1 && j != i && abs(roots[static_cast<std::size_t>(j)] - mid) <= reach)
      throw DomainError("half_twist(" + std::to_string(i) + "): another root lies in the exchange disc");
  const QComplex lead = base.back();
  auto coeffs = [lead, roots, mid, half, i](const QReal& s) {
    QReal scale = 1, theta = 0;
    const QReal third = QReal(1) / 3;
    if (s < third) {
      scale = 1 - s * QReal(1.5);
    } else if (s < 2 * third) {
      scale = QReal(0.5);
      theta = detail::q_pi() * (s - third) * 3;
    } else {
      scale = QReal(0.5) + (s - 2 * third) * QReal(1.5);
      theta = detail::q_pi();
    }
    if (s >= 1) scale = 1;
    const QComplex offset = half * detail::q_expi(theta) * QComplex(scale);
    std::vector<QComplex> moved = roots;
    moved[static_cast<std::size_t>(i - 1)] = mid - offset;
    moved[static_cast<std::size_t>(i)] = mid + offset;
    return detail::from_roots(lead, moved);
  };
  return {"half_twist(" + std::to_string(i) + ")", coeffs};
}

// c_index(s) = c_index + radius (e^{2 pi i s} - 1) u, u the unit direction of
// c_index (or 1 when it vanishes). index is the power of t.
inline LoopSegment circle(const QPoly& base, int index, double radius) {
  if (index < 0 || index >= static_cast<int>(base.size()))
    throw DomainError("circle(" + std::to_string(index) + "): coefficient index out of range 0.." +
                      std::to_string(base.size() - 1));
  if (!(radius > 0)) throw DomainError("circle: radius must be positive");
  const QComplex c = base[static_cast<std::size_t>(index)];
  const QReal mag = abs(c);
  const QComplex u = mag == 0 ? QComplex(QReal(1)) : c / QComplex(mag);
  const QReal r = radius;
  auto coeffs = [base, index, c, u, r](const QReal& s) {
    QPoly p = base;
    QComplex e = detail::q_expi(2 * detail::q_pi() * s);
    if (s >= 1) e = QComplex(QReal(1));
    p[static_cast<std::size_t>(index)] = c + QComplex(r) * (e - QComplex(QReal(1))) * u;
    return p;
  };
  std::ostringstream label;
  label << "circle(" << index << ", " << radius << ")";
  return {label.str(), coeffs};
}

inline LoopSegment reversed(const LoopSegment& seg) {
  auto f = seg.coeffs;
  return {seg.label + "^-1", [f](const QReal& s) { return f(QReal(1) - s); }};
}

inline std::vector<LoopSegment> inverse_path(const std::vector<LoopSegment>& path) {
  std::vector<LoopSegment> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) out.push_back(reversed(*it));
  return out;
}

inline MonodromyLoop track_roots(const QPoly& base, const std::vector<LoopSegment>& path, const TrackOptions& opt = {}) {
  if (!(opt.tolerance > 0)) throw DomainError("tolerance must be positive");
  if (!(opt.max_step > 0) || opt.max_step > 1) throw DomainError("max_step must lie in (0, 1]");
  MonodromyLoop loop;
  loop.base = base;
  loop.roots = base_roots(base, opt);
  loop.max_step = opt.max_step;
  loop.stats.min_gap = static_cast<double>(loop.roots.size() > 1 ? detail::min_gap(loop.roots) : QReal(1));
  loop.stats.min_step = opt.max_step;
  std::vector<QComplex> z = loop.roots;
  for (std::size_t k = 0; k < path.size(); ++k) {
    loop.segments.push_back(path[k].label);
    detail::track_segment(path[k], k, z, opt, loop.stats);
  }
  // Final matching against the labelled base roots.
  const std::size_t n = z.size();
  const QReal gap = n > 1 ? detail::min_gap(loop.roots) : QReal(1);
  loop.permutation.assign(n, -1);
  std::vector<bool> used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (abs(z[j] - loop.roots[k]) < abs(z[j] - loop.roots[best])) best = k;
    if (abs(z[j] - loop.roots[best]) >= gap / 2 || used[best])
      throw ContinuationError("path does not close: final roots do not match the base roots");
    used[best] = true;
    loop.permutation[j] = static_cast<int>(best);
  }
  return loop;
}

// Left-to-right: first a, then b.
inline std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[j] = b[static_cast<std::size_t>(a[j])];
  return out;
}

inline std::vector<int> inverse(const std::vector<int>& p) {
  std::vector<int> out(p.size());
  for (std::size_t j = 0; j < p.size(); ++j) out[static_cast<std::size_t>(p[j])] = static_cast<int>(j);
  return out;
}

inline std::vector<int> identity_permutation(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(j)] = j;
  return p;
}

inline bool is_identity(const std::vector<int>& p) { return p == identity_permutation(static_cast<int>(p.size())); }

// 1-based cycle notation, fixed points omitted; "()" for the identity.
inline std::string cycle_notation(const std::vector<int>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == static_cast<int>(s)) continue;
    out += '(';
    for (std::size_t j = s; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = true;
      if (j != s) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

// Braid word on the real-rooted base: +i is b_i, -i its inverse.
inline std::vector<LoopSegment> generator_word_path(int n, const std::vector<int>& word) {
  const QPoly base = real_rooted_base(n);
  std::vector<QComplex> roots;
  for (int j = 1; j <= n; ++j) roots.emplace_back(QReal(j));
  std::vector<LoopSegment> path;
  for (int g : word) {
    if (g == 0) throw DomainError("braid word letters are nonzero");
    auto seg = half_twist(base, roots, g > 0 ? g : -g);
    path.push_back(g > 0 ? seg : reversed(seg));
  }
  return path;
}

inline MonodromyLoop generator_word_loop(int n, const std::vector<int>& word, const TrackOptions& opt = {}) {
  if (n < 2) throw DomainError("need n >= 2 roots");
  return track_roots(real_rooted_base(n), generator_word_path(n, word), opt);
}

inline MonodromyLoop standard_generator_loop(int n, int i, const TrackOptions& opt = {}) {
  if (n < 2) throw DomainError("need n >= 2 roots");
  if (i < 1 || i > n - 1) throw DomainError("generator index must lie in 1.." + std::to_string(n - 1));
  return generator_word_loop(n, {i}, opt);
}

inline std::vector<int> spherical_word(int n) {
  std::vector<int> word;
  for (int i = 1; i < n; ++i) word.push_back(i);
  for (int i = n - 1; i >= 1; --i) word.push_back(i);
  return word;
}

inline std::vector<int> spherical_word_check(int n, const TrackOptions& opt = {}) {
  if (n < 2) throw DomainError("spherical_word_check needs n >= 2");
  return generator_word_loop(n, spherical_word(n), opt).permutation;
}

// Subgroup of S_n generated by the given permutations.
inline std::set<std::vector<int>> generated_group(int n, const std::vector<std::vector<int>>& gens) {
  std::set<std::vector<int>> group{identity_permutation(n)};
  std::vector<std::vector<int>> frontier{identity_permutation(n)};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        auto h = compose(g, s);
        if (group.insert(h).second) next.push_back(std::move(h));
      }
    frontier.swap(next);
  }
  return group;
}

// Tracks the n-1 standard generators plus sample_loops random braid words,
// closes them into a group and decomposes its permutation character.
inline Multiset defining_rep_decomposition(int n, int sample_loops, std::uint64_t seed, const TrackOptions& opt = {}) {
  if (n < 2) throw DomainError("defining_rep_decomposition needs n >= 2");
  if (sample_loops < 0) throw DomainError("sample_loops must be >= 0");
  std::vector<std::vector<int>> gens;
  for (int i = 1; i < n; ++i) {
    auto perm = standard_generator_loop(n, i, opt).permutation;
    std::vector<int> expected = identity_permutation(n);
    std::swap(expected[static_cast<std::size_t>(i - 1)], expected[static_cast<std::size_t>(i)]);
    if (perm != expected)
      throw ConsistencyError("generator b_" + std::to_string(i) + " tracked to " + cycle_notation(perm));
    gens.push_back(std::move(perm));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(1, n - 1), length(1, 2 * n), sign(0, 1);
  for (int s = 0; s < sample_loops; ++s) {
    std::vector<int> word(static_cast<std::size_t>(length(rng)));
    for (auto& w : word) w = letter(rng) * (sign(rng) ? 1 : -1);
    gens.push_back(generator_word_loop(n, word, opt).permutation);
  }
  const auto group = generated_group(n, gens);
  const Integer order = factorial(n);
  if (Integer(group.size()) != order)
    throw ConsistencyError("monodromy group has order " + std::to_string(group.size()) + ", not n!");
  const auto table = character_table(n);
  std::vector<Integer> tally(table->count());
  std::vector<int> fixed(table->count());
  for (const auto& g : group) {
    const Partition type = cycle_type(g);
    const std::size_t c = table->class_index(type);
    tally[c] += 1;
    fixed[c] = static_cast<int>(std::count(type.parts().begin(), type.parts().end(), 1));
  }
  Multiset out;
  for (std::size_t r = 0; r < table->count(); ++r) {
    Integer sum = 0;
    for (std::size_t c = 0; c < table->count(); ++c) sum += tally[c] * fixed[c] * table->values()[r][c];
    if (sum % order != 0) throw ConsistencyError("permutation character has a non-integral multiplicity");
    const Integer m = sum / order;
    if (m != 0) out.emplace(table->irreducibles()[r], static_cast<std::int64_t>(m));
  }
  return out;
}

}  // namespace kronsec
