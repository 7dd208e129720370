#pragma once
// Weierstrass model y^2 = x^3 + a1 x^2 + a2 x + a3 over K(t) and its chord
// and tangent group law. Setting MW_TRISECT_DEBUG=1 re-checks closure after
// every group-law step.

#include <cstdlib>
#include <vector>

#include "mwtrisect/rfunc.hpp"

namespace mwtrisect {

struct WCurve {
  RFunc a1, a2, a3;

  WCurve(RFunc a1_, RFunc a2_, RFunc a3_)
      : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)) {
    // Discriminant of the right-hand cubic; zero would make the generic fiber singular.
    const RFunc c18(18), c4(4), c27(27);
    RFunc disc = c18 * a1 * a2 * a3 - c4 * a1 * a1 * a1 * a3 + a1 * a1 * a2 * a2 -
                 c4 * a2 * a2 * a2 - c27 * a3 * a3;
    if (disc.is_zero())
      throw Error(errc::singular_curve, "right-hand cubic has a repeated root");
  }

  XPoly rhs() const {
    XPoly f;
    f.c = {a3, a2, a1, RFunc(1)};
    f.normalize();  // a cubic stays a cubic; normalize only guards the zero tail
    return f;
  }
};

struct MWPoint {
  bool infinity = true;
  RFunc x, y;

  static MWPoint at_infinity() { return MWPoint{}; }
  static MWPoint affine(RFunc x0, RFunc y0) {
    MWPoint p;
    p.infinity = false;
    p.x = std::move(x0);
    p.y = std::move(y0);
    return p;
  }

  friend bool operator==(const MWPoint& p, const MWPoint& q) {
    if (p.infinity || q.infinity) return p.infinity == q.infinity;
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator!=(const MWPoint& p, const MWPoint& q) { return !(p == q); }
};

inline bool on_curve(const WCurve& c, const MWPoint& p) {
  if (p.infinity) return true;
  return (p.y * p.y - c.rhs().eval(p.x)).is_zero();
}

namespace detail {
inline bool debug_checks_enabled() {
  static const bool enabled = [] {
    const char* v = std::getenv("MW_TRISECT_DEBUG");
    return v != nullptr && v[0] == '1' && v[1] == '\0';
  }();
  return enabled;
}
inline void debug_assert_on_curve(const WCurve& c, const MWPoint& p) {
  if (debug_checks_enabled() && !on_curve(c, p))
    throw Error(errc::not_on_curve, "group-law step left the curve");
}
}  // namespace detail

inline MWPoint negate(const WCurve& c, const MWPoint& p) {
  if (!on_curve(c, p)) throw Error(errc::not_on_curve, "negate: point is not on the curve");
  if (p.infinity) return p;
  return MWPoint::affine(p.x, -p.y);
}

inline MWPoint add(const WCurve& c, const MWPoint& p, const MWPoint& q) {
  if (!on_curve(c, p) || !on_curve(c, q))
    throw Error(errc::not_on_curve, "add: operand is not on the curve");
  if (p.infinity) return q;
  if (q.infinity) return p;

  RFunc lambda;
  if (p.x == q.x) {
    if ((p.y + q.y).is_zero()) return MWPoint::at_infinity();
    // p == q with y != 0: tangent slope.
    lambda = (RFunc(3) * p.x * p.x + RFunc(2) * c.a1 * p.x + c.a2) / (RFunc(2) * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  RFunc x3 = lambda * lambda - c.a1 - p.x - q.x;
  RFunc y3 = -(p.y + lambda * (x3 - p.x));
  MWPoint r = MWPoint::affine(std::move(x3), std::move(y3));
  detail::debug_assert_on_curve(c, r);
  return r;
}

inline MWPoint scalar_mul(const WCurve& c, long long n, const MWPoint& p) {
  if (!on_curve(c, p)) throw Error(errc::not_on_curve, "scalar_mul: point is not on the curve");
  MWPoint base = n < 0 ? negate(c, p) : p;
  unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1ull
                               : static_cast<unsigned long long>(n);
  MWPoint acc = MWPoint::at_infinity();
  while (k) {
    if (k & 1ull) acc = add(c, acc, base);
    k >>= 1ull;
    if (k) base = add(c, base, base);
  }
  detail::debug_assert_on_curve(c, acc);
  return acc;
}

inline MWPoint fold_add(const WCurve& c, const std::vector<MWPoint>& pts) {
  MWPoint acc = MWPoint::at_infinity();
  for (const auto& p : pts) acc = add(c, acc, p);
  return acc;
}

}  // namespace mwtrisect
