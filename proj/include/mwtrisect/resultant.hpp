#pragma once
// Resultant with respect to x of two bivariate polynomials, computed by the
// subresultant pseudo-remainder sequence (fraction-free; all interior
// divisions are exact in K[t]). Sign convention: Res(x - a, x - b) = a - b,
// and Res(f, c) = c^deg(f) for constant c.

#include <utility>

#include "mwtrisect/rfunc.hpp"

namespace mwtrisect {

// Monic gcd of the coefficients (zero for the zero polynomial).
inline UPoly bipoly_content(const BiPoly& p) {
  UPoly g;
  for (const auto& k : p.c) {
    if (k.is_zero()) continue;
    g = g.is_zero() ? make_monic(k) : poly_gcd(g, k);
    if (g.degree() == 0) break;
  }
  return g;
}

inline BiPoly bipoly_exact_div_scalar(const BiPoly& p, const UPoly& s) {
  BiPoly r;
  r.c.reserve(p.c.size());
  for (const auto& k : p.c) r.c.push_back(k.is_zero() ? k : poly_exact_div(k, s));
  r.normalize();
  return r;
}

// Signed pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B.
inline BiPoly bipoly_prem(BiPoly A, const BiPoly& B) {
  const int db = B.degree();
  int e = A.degree() - db + 1;
  const UPoly& lb = B.leading();
  while (!A.is_zero() && A.degree() >= db) {
    const std::size_t shift = A.c.size() - B.c.size();
    const UPoly la = A.leading();
    for (auto& k : A.c) k = k * lb;
    for (std::size_t i = 0; i < B.c.size(); ++i) A.c[shift + i] -= la * B.c[i];
    A.normalize();
    --e;
  }
  if (e > 0) {
    const UPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& k : A.c) k = k * f;
  }
  return A;
}

inline UPoly resultant_x(const BiPoly& g, const BiPoly& h) {
  if (g.degree() < 1 && h.degree() < 1)
    throw Error(errc::both_constant_in_x, "resultant requires a positive degree in x");
  if (g.is_zero() || h.is_zero()) return UPoly();

  BiPoly A = g, B = h;
  bool negate = false;
  if (A.degree() < B.degree()) {
    std::swap(A, B);
    if ((A.degree() & 1) && (B.degree() & 1)) negate = !negate;
  }
  // Res(c*A, B) = c^deg(B) * Res(A, B) for a scalar (x-free) factor c.
  const UPoly ca = bipoly_content(A);
  const UPoly cb = bipoly_content(B);
  A = bipoly_exact_div_scalar(A, ca);
  B = bipoly_exact_div_scalar(B, cb);
  UPoly t = ca.pow(static_cast<unsigned>(B.degree())) * cb.pow(static_cast<unsigned>(A.degree()));

  UPoly gg(1), hh(1);
  while (B.degree() > 0) {
    const int delta = A.degree() - B.degree();
    if ((A.degree() & 1) && (B.degree() & 1)) negate = !negate;
    BiPoly R = bipoly_prem(A, B);
    A = std::move(B);
    B = bipoly_exact_div_scalar(R, gg * hh.pow(static_cast<unsigned>(delta)));
    gg = A.leading();
    if (delta > 0)
      hh = poly_exact_div(gg.pow(static_cast<unsigned>(delta)),
                          hh.pow(static_cast<unsigned>(delta - 1)));
    if (B.is_zero()) return UPoly();  // common factor
  }
  // B is a nonzero constant in x.
  const UPoly lb = B.leading();
  UPoly res = poly_exact_div(lb.pow(static_cast<unsigned>(A.degree())),
                             hh.pow(static_cast<unsigned>(A.degree() > 0 ? A.degree() - 1 : 0)));
  res = res * t;
  return negate ? -res : res;
}

}  // namespace mwtrisect
