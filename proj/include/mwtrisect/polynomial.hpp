#pragma once
// Dense univariate polynomials over an exact field, plus monic gcd and Yun
// squarefree decomposition (characteristic 0).

#include <cstddef>
#include <utility>
#include <vector>

#include "mwtrisect/scalars.hpp"

namespace mwtrisect {

template <class K>
struct Poly {
  // Ascending powers; no trailing zeros; the zero polynomial is the empty vector.
  std::vector<K> c;

  Poly() = default;
  Poly(long long v) : Poly(K(v)) {}
  explicit Poly(const K& k) {
    if (!(k == K())) c.push_back(k);
  }
  explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { normalize(); }

  static Poly var() {
    Poly p;
    p.c = {K(0), K(1)};
    return p;
  }
  static Poly monomial(const K& k, std::size_t n) {
    Poly p;
    if (k == K()) return p;
    p.c.assign(n + 1, K());
    p.c[n] = k;
    return p;
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  K coeff(std::size_t i) const { return i < c.size() ? c[i] : K(); }
  const K& leading() const { return c.back(); }

  void normalize() {
    while (!c.empty() && c.back() == K()) c.pop_back();
  }

  friend Poly operator-(const Poly& p) {
    Poly r = p;
    for (auto& k : r.c) k = -k;
    return r;
  }
  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), K());
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.normalize();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, K());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == K()) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend Poly operator*(const Poly& p, const K& k) { return p.scaled(k); }
  friend Poly operator*(const K& k, const Poly& p) { return p.scaled(k); }

  Poly scaled(const K& k) const {
    Poly r;
    if (k == K()) return r;
    r.c = c;
    for (auto& v : r.c) v = v * k;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    Poly r;
    if (c.size() <= 1) return r;
    r.c.resize(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) r.c[i - 1] = c[i] * K(static_cast<long long>(i));
    r.normalize();
    return r;
  }

  K eval(const K& at) const {
    K acc{};
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * at + c[i];
    return acc;
  }

  Poly pow(unsigned n) const {
    Poly r(1);
    Poly base = *this;
    while (n) {
      if (n & 1u) r *= base;
      base *= base;
      n >>= 1u;
    }
    return r;
  }
};

template <class K>
Poly<K> make_monic(const Poly<K>& p) {
  if (p.is_zero()) return p;
  return p.scaled(K(1) / p.leading());
}

template <class K>
std::pair<Poly<K>, Poly<K>> poly_divrem(const Poly<K>& a, const Poly<K>& b) {
  if (b.is_zero()) throw Error(errc::division_by_zero, "polynomial division by zero");
  Poly<K> q, r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c.assign(a.c.size() - b.c.size() + 1, K());
  const K inv_lead = K(1) / b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const std::size_t shift = r.c.size() - b.c.size();
    const K factor = r.leading() * inv_lead;
    q.c[shift] = factor;
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= factor * b.c[i];
    r.c.pop_back();
    r.normalize();
  }
  q.normalize();
  return {q, r};
}

// Exact quotient; the remainder must vanish.
template <class K>
Poly<K> poly_exact_div(const Poly<K>& a, const Poly<K>& b) {
  auto [q, r] = poly_divrem(a, b);
  if (!r.is_zero()) throw Error(errc::inexact_division, "division left a nonzero remainder");
  return q;
}

// Monic gcd; gcd(p, 0) = monic(p).
template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  if (a.is_zero() && b.is_zero()) throw Error(errc::both_zero, "gcd of two zero polynomials");
  while (!b.is_zero()) {
    auto [q, r] = poly_divrem(a, b);
    (void)q;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

using UPoly = Poly<QuadScalar>;

namespace gcd_detail {

inline Int denominator_lcm(const UPoly& p) {
  Int l = 1;
  for (const auto& k : p.c)
    for (const Rat* part : {&k.rational_part(), &k.radical_part()}) {
      const Int d = boost::multiprecision::denominator(*part);
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
  return l;
}

// Divide out the largest rational integer dividing every coefficient.
inline void strip_integer_content(UPoly& p) {
  Int g = 0;
  for (const auto& k : p.c) {
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(k.rational_part()));
    g = boost::multiprecision::gcd(g, boost::multiprecision::numerator(k.radical_part()));
    if (g == 1) return;
  }
  if (g > 1) p = p.scaled(QuadScalar(Rat(Int(1), g)));
}

inline UPoly lift_primitive(const UPoly& p) {
  UPoly r = p.scaled(QuadScalar(Rat(denominator_lcm(p))));
  strip_integer_content(r);
  return r;
}

}  // namespace gcd_detail

// Overload for the concrete coefficient field: a primitive pseudo-remainder
// sequence over integer-valued scalars.  The generic Euclidean loop squares
// coefficient sizes per step on large operands; this one keeps every remainder
// integral and content-free, which is what the rational-function normalizer
// leans on when group-law coordinates grow.
inline UPoly poly_gcd(const UPoly& a0, const UPoly& b0) {
  if (a0.is_zero() && b0.is_zero()) throw Error(errc::both_zero, "gcd of two zero polynomials");
  if (a0.is_zero()) return make_monic(b0);
  if (b0.is_zero()) return make_monic(a0);
  UPoly a = gcd_detail::lift_primitive(a0);
  UPoly b = gcd_detail::lift_primitive(b0);
  for (;;) {
    if (b.degree() == 0) return UPoly(1);
    UPoly r = a;  // pseudo-remainder: scale by lc(b) instead of dividing by it
    const QuadScalar lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const QuadScalar lr = r.leading();
      const std::size_t shift = r.c.size() - b.c.size();
      for (auto& k : r.c) k *= lb;
      for (std::size_t i = 0; i < b.c.size(); ++i) r.c[shift + i] -= lr * b.c[i];
      r.normalize();
    }
    if (r.is_zero()) return make_monic(b);
    // Canonicalize: over Q(sqrt(d)) the coefficient ring has non-rational
    // content and an infinite unit group, so stripping integer content alone
    // lets pseudo-remainders drift through unit powers.  Monic-then-lift
    // yields the one primitive associate with a positive rational leading
    // coefficient, independent of the ring.
    r = gcd_detail::lift_primitive(make_monic(r));
    a = std::move(b);
    b = std::move(r);
  }
}

inline UPoly upoly_gcd(const UPoly& p, const UPoly& q) { return poly_gcd(p, q); }

template <class K>
struct ExtendedGcd {
  Poly<K> g, s, t;  // s*a + t*b = g, with g monic
};

template <class K>
ExtendedGcd<K> poly_exgcd(const Poly<K>& a, const Poly<K>& b) {
  if (a.is_zero() && b.is_zero()) throw Error(errc::both_zero, "gcd of two zero polynomials");
  Poly<K> r0 = a, r1 = b;
  Poly<K> s0(1), s1(0), t0(0), t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = poly_divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<K> s2 = s0 - q * s1;
    Poly<K> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const K inv = K(1) / r0.leading();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class K>
struct SquarefreeDecomposition {
  K content;  // leading coefficient; the listed factors are monic
  std::vector<std::pair<Poly<K>, int>> factors;  // multiplicities strictly increasing
};

// Yun's algorithm, characteristic 0.
template <class K>
SquarefreeDecomposition<K> squarefree_decomposition(const Poly<K>& p) {
  if (p.is_zero()) throw Error(errc::zero_polynomial, "squarefree decomposition of zero");
  SquarefreeDecomposition<K> out;
  out.content = p.leading();
  if (p.degree() == 0) return out;
  Poly<K> a = make_monic(p);
  Poly<K> g = poly_gcd(a, a.derivative());
  if (g.degree() == 0) {
    out.factors.push_back({a, 1});
    return out;
  }
  Poly<K> b = poly_exact_div(a, g);
  Poly<K> cpart = poly_exact_div(a.derivative(), g);
  Poly<K> d = cpart - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly<K> f = poly_gcd(b, d);
    if (f.degree() > 0) out.factors.push_back({f, i});
    b = poly_exact_div(b, f);
    cpart = poly_exact_div(d, f);
    d = cpart - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace mwtrisect
