#pragma once
// Rational functions in t over QuadScalar, kept in canonical form (monic
// denominator, coprime with the numerator), and the polynomial tower on top:
// XPoly (polynomials in x over rational functions) and BiPoly (polynomials in
// x with polynomial coefficients in t).

#include <utility>

#include "mwtrisect/polynomial.hpp"

namespace mwtrisect {

struct RFunc {
  UPoly num;
  UPoly den;  // monic, nonzero, gcd(num, den) = 1; zero value is 0/1

  RFunc() : den(1) {}
  RFunc(long long v) : num(v), den(1) {}
  RFunc(const QuadScalar& k) : num(UPoly(k)), den(1) {}
  RFunc(const UPoly& n) : num(n), den(1) {}
  RFunc(UPoly n, UPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den.is_zero()) throw Error(errc::division_by_zero, "zero denominator");
    if (num.is_zero()) {
      den = UPoly(1);
      return;
    }
    UPoly g = poly_gcd(num, den);
    if (g.degree() > 0) {
      num = poly_exact_div(num, g);
      den = poly_exact_div(den, g);
    }
    const QuadScalar lead = den.leading();
    if (!(lead == QuadScalar(1))) {
      const QuadScalar inv = QuadScalar(1) / lead;
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return den.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num.degree() <= 0; }
  QuadScalar as_scalar() const {
    if (!is_constant()) throw Error(errc::expected_scalar, "value is not a constant");
    return num.coeff(0);
  }

  friend RFunc operator-(const RFunc& f) {
    RFunc r;
    r.num = -f.num;
    r.den = f.den;
    return r;
  }
  friend RFunc operator+(const RFunc& f, const RFunc& g) {
    return RFunc(f.num * g.den + g.num * f.den, f.den * g.den);
  }
  friend RFunc operator-(const RFunc& f, const RFunc& g) { return f + (-g); }
  friend RFunc operator*(const RFunc& f, const RFunc& g) {
    return RFunc(f.num * g.num, f.den * g.den);
  }
  friend RFunc operator/(const RFunc& f, const RFunc& g) {
    if (g.is_zero()) throw Error(errc::division_by_zero, "division by zero rational function");
    return RFunc(f.num * g.den, f.den * g.num);
  }
  RFunc& operator+=(const RFunc& g) { return *this = *this + g; }
  RFunc& operator-=(const RFunc& g) { return *this = *this - g; }
  RFunc& operator*=(const RFunc& g) { return *this = *this * g; }
  RFunc& operator/=(const RFunc& g) { return *this = *this / g; }

  friend bool operator==(const RFunc& f, const RFunc& g) {
    return f.num == g.num && f.den == g.den;
  }
  friend bool operator!=(const RFunc& f, const RFunc& g) { return !(f == g); }

  RFunc eval_t(const QuadScalar& t0) const {
    const QuadScalar d = den.eval(t0);
    if (d.is_zero()) throw Error(errc::division_by_zero, "pole at the evaluation point");
    return RFunc(UPoly(num.eval(t0) / d));
  }
};

using XPoly = Poly<RFunc>;   // polynomials in x over K(t)
using BiPoly = Poly<UPoly>;  // polynomials in x over K[t]

inline std::pair<XPoly, XPoly> xpoly_divrem(const XPoly& f, const XPoly& g) {
  return poly_divrem(f, g);
}

inline RFunc eval_at_x(const XPoly& p, const RFunc& v) { return p.eval(v); }

inline XPoly xpoly_from_bipoly(const BiPoly& p) {
  XPoly r;
  r.c.reserve(p.c.size());
  for (const auto& k : p.c) r.c.push_back(RFunc(k));
  return r;
}

// Requires every coefficient to be polynomial in t.
inline BiPoly bipoly_from_xpoly(const XPoly& p) {
  BiPoly r;
  r.c.reserve(p.c.size());
  for (const auto& k : p.c) {
    if (!k.is_polynomial())
      throw Error(errc::not_polynomial, "coefficient has a nontrivial denominator");
    r.c.push_back(k.num);
  }
  return r;
}

// (cleared, scale): cleared = scale * p with polynomial coefficients.
inline std::pair<BiPoly, UPoly> clear_denominators(const XPoly& p) {
  UPoly scale(1);
  for (const auto& k : p.c) {
    UPoly g = poly_gcd(scale, k.den);
    scale = scale * poly_exact_div(k.den, g);
  }
  BiPoly r;
  r.c.reserve(p.c.size());
  for (const auto& k : p.c) r.c.push_back(k.num * poly_exact_div(scale, k.den));
  r.normalize();
  return {r, scale};
}

inline UPoly upoly_var() { return UPoly::var(); }
inline XPoly xpoly_var() { return XPoly::var(); }

// d/dt, coefficient-wise.
inline BiPoly bipoly_dt(const BiPoly& p) {
  BiPoly r;
  r.c.reserve(p.c.size());
  for (const auto& k : p.c) r.c.push_back(k.derivative());
  r.normalize();
  return r;
}

}  // namespace mwtrisect
