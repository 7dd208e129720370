#pragma once
// Mumford pairs (u, v) for semi-reduced divisors on y^2 = f(x), the class-point
// extraction for deg u <= 3, and the trisection construction
//   v = b0 (x - x_P)(x - b1) - y_P,  u = (v^2 - f) / (b0^2 (x - x_P)).

#include <utility>
#include <vector>

#include "mwtrisect/curve.hpp"

namespace mwtrisect {

struct DivisorEntry {
  MWPoint point;  // affine
  int multiplicity = 1;
};

struct SemiReducedDivisor {
  std::vector<DivisorEntry> entries;
};

// Invariants: affine points, multiplicities >= 1, no two entries sharing an
// x-coordinate (which also excludes a point together with its involute), and
// ramification points (y = 0) only with multiplicity 1.
inline void validate_semi_reduced(const SemiReducedDivisor& d) {
  for (std::size_t i = 0; i < d.entries.size(); ++i) {
    const auto& e = d.entries[i];
    if (e.point.infinity)
      throw Error(errc::point_at_infinity, "divisor entries must be affine points");
    if (e.multiplicity < 1)
      throw Error(errc::multiplicity_unsupported, "multiplicities must be positive");
    if (e.point.y.is_zero() && e.multiplicity != 1)
      throw Error(errc::multiplicity_unsupported,
                  "a ramification point may appear only with multiplicity 1");
    for (std::size_t j = i + 1; j < d.entries.size(); ++j)
      if (d.entries[j].point.x == e.point.x)
        throw Error(errc::repeated_x, "two entries share an x-coordinate");
  }
}

struct MumfordPair {
  XPoly u, v;
};

// f must be monic, squarefree, of odd degree >= 3.
inline void require_valid_f(const XPoly& f) {
  if (f.degree() < 3 || f.degree() % 2 == 0 || !(f.leading() == RFunc(1)))
    throw Error(errc::non_monic_f, "f must be monic of odd degree >= 3");
  if (poly_gcd(f, f.derivative()).degree() != 0)
    throw Error(errc::non_squarefree_f, "f has a repeated root");
}

inline bool validate_mumford(const XPoly& u, const XPoly& v, const XPoly& f) {
  require_valid_f(f);
  if (u.is_zero() || !(u.leading() == RFunc(1))) return false;
  if (!v.is_zero() && v.degree() >= u.degree()) return false;
  auto [q, r] = poly_divrem(v * v - f, u);
  (void)q;
  return r.is_zero();
}

// All multiplicities must be 1; u = prod (x - x_i), v interpolates (x_i, y_i).
inline MumfordPair mumford_from_points(const SemiReducedDivisor& d, const WCurve& c) {
  validate_semi_reduced(d);
  if (d.entries.empty())
    throw Error(errc::invalid_mumford, "empty divisor has no Mumford pair here");
  for (const auto& e : d.entries) {
    if (e.multiplicity != 1)
      throw Error(errc::multiplicity_unsupported, "only multiplicity-1 entries are supported");
    if (!on_curve(c, e.point))
      throw Error(errc::not_on_curve, "divisor entry is not on the curve");
  }
  XPoly u(1);
  const XPoly x = XPoly::var();
  for (const auto& e : d.entries) u *= x - XPoly(RFunc(e.point.x));
  XPoly v;
  for (const auto& e : d.entries) {
    // Lagrange basis polynomial through this entry.
    XPoly basis(1);
    RFunc scale = e.point.y;
    for (const auto& o : d.entries) {
      if (&o == &e) continue;
      basis *= x - XPoly(RFunc(o.point.x));
      scale = scale / (e.point.x - o.point.x);
    }
    v += basis.scaled(scale);
  }
  MumfordPair m{std::move(u), std::move(v)};
  if (!validate_mumford(m.u, m.v, c.rhs()))
    throw Error(errc::invalid_mumford, "interpolation failed to produce a valid pair");
  return m;
}

// Sum of the divisor class as a single point, for deg u in {1, 2, 3}.
inline MWPoint class_point(const MumfordPair& m, const WCurve& c) {
  const XPoly f = c.rhs();
  if (m.u.degree() < 1 || m.u.degree() > 3)
    throw Error(errc::invalid_mumford, "class_point needs deg u in {1, 2, 3}");
  if (!validate_mumford(m.u, m.v, f))
    throw Error(errc::invalid_mumford, "not a valid Mumford pair for this curve");
  if (m.u.degree() == 1) {
    RFunc x0 = -m.u.coeff(0);
    return MWPoint::affine(x0, m.v.eval(x0));
  }
  auto [q, r] = poly_divrem(m.v * m.v - f, m.u);
  (void)r;  // zero by validation
  if (q.degree() == 0 || q.is_zero()) return MWPoint::at_infinity();
  if (q.degree() == 1) {
    RFunc x0 = -q.coeff(0) / q.coeff(1);
    return MWPoint::affine(x0, -m.v.eval(x0));
  }
  throw Error(errc::unexpected_quotient_degree,
              "quotient degree " + std::to_string(q.degree()) + " signals invalid input");
}

// P0 affine, b0 a nonzero scalar, b1 free of x. The returned u is monic of
// degree 3 and class_point((u, v)) = P0.
inline MumfordPair trisection_construct(const WCurve& c, const MWPoint& p0,
                                        const QuadScalar& b0, const RFunc& b1) {
  if (p0.infinity)
    throw Error(errc::point_at_infinity, "trisection anchor must be affine");
  if (b0.is_zero()) throw Error(errc::zero_b0, "b0 must be nonzero");
  if (!on_curve(c, p0))
    throw Error(errc::not_on_curve, "trisection anchor is not on the curve");
  const XPoly x = XPoly::var();
  const RFunc b0r{b0};
  XPoly v = ((x - XPoly(p0.x)) * (x - XPoly(b1))).scaled(b0r) - XPoly(p0.y);
  XPoly div = (x - XPoly(p0.x)).scaled(b0r * b0r);
  XPoly u = poly_exact_div(v * v - c.rhs(), div);
  return MumfordPair{std::move(u), std::move(v)};
}

}  // namespace mwtrisect
