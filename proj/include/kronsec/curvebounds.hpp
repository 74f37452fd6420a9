#pragma once

// Riemann-Roch bookkeeping for a degree-n line bundle M on a genus-g curve.
// Nothing geometric is represented; only the integer inequalities.

#include "kronsec/numeric.hpp"

#include <string>

namespace kronsec {

struct CurveContext {
  int genus = 0;
  int degree = 0;
};

inline void check_genus(const CurveContext& ctx) {
  if (ctx.genus < 0) throw DomainError("genus must be >= 0, got " + std::to_string(ctx.genus));
}

// n > 2g - 2: Abel-Jacobi on Sym^n is a projective bundle.
inline bool fibration_holds(const CurveContext& ctx) { return ctx.degree > 2 * ctx.genus - 2; }

// h^0(M(-D)) for deg D = twist, only where h^1 vanishes.
inline int h0(const CurveContext& ctx, int twist) {
  check_genus(ctx);
  if (twist < 0) throw DomainError("twist must be >= 0, got " + std::to_string(twist));
  if (ctx.degree - twist <= 2 * ctx.genus - 2)
    throw DomainError("h1 may be nonzero: n - twist = " + std::to_string(ctx.degree - twist) +
                      " is not > 2g - 2 = " + std::to_string(2 * ctx.genus - 2));
  return ctx.degree - twist + 1 - ctx.genus;
}

// Sufficient condition for M to separate 2k points: deg K - M + D < 0.
inline bool separates_2k(const CurveContext& ctx, int k) {
  check_genus(ctx);
  if (k < 1) throw DomainError("k must be >= 1, got " + std::to_string(k));
  return 2 * ctx.genus - 2 - ctx.degree + 2 * k < 0;
}

// floor((n+1)/2) - g, floored at 0. Zero means the admissible range is empty.
inline int max_admissible_k(const CurveContext& ctx) {
  check_genus(ctx);
  if (!fibration_holds(ctx))
    throw DomainError("fibration condition n > 2g - 2 fails: n = " + std::to_string(ctx.degree) +
                      ", 2g - 2 = " + std::to_string(2 * ctx.genus - 2));
  const int k = (ctx.degree + 1) / 2 - ctx.genus;
  return k > 0 ? k : 0;
}

// The genus-free threshold k <= (n+1)/2, compared without rounding.
inline bool within_rational_threshold(int n, int k) { return 2 * k <= n + 1; }

inline bool within_genus_threshold(const CurveContext& ctx, int k) { return k >= 1 && k <= max_admissible_k(ctx); }

}  // namespace kronsec
