#pragma once
// Projective plane curves over Q(sqrt(d)): intersection profiles through
// elimination, even-contact certification, smoothness in three charts, and
// the scenario runner for the built-in worked examples.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mwtrisect/curve.hpp"
#include "mwtrisect/lattice.hpp"
#include "mwtrisect/mumford.hpp"
#include "mwtrisect/parser.hpp"
#include "mwtrisect/polynomial.hpp"
#include "mwtrisect/resultant.hpp"
#include "mwtrisect/rfunc.hpp"
#include "mwtrisect/scenarios.hpp"

namespace mwtrisect {

inline int affine_total_degree(const BiPoly& g) {
  int n = -1;
  for (std::size_t j = 0; j < g.c.size(); ++j)
    if (!g.c[j].is_zero()) n = std::max(n, static_cast<int>(j) + g.c[j].degree());
  return n;
}

// A plane projective curve, stored in the affine chart Z = 1 as a polynomial
// in (t, x) together with its declared homogeneous degree.  A declared degree
// above the affine total degree adds the line at infinity as a component.
struct ProjCurve {
  BiPoly g;
  int total_degree = 0;

  ProjCurve(BiPoly poly, int degree) : g(std::move(poly)), total_degree(degree) {
    if (g.is_zero()) throw Error(errc::zero_curve, "plane curve polynomial is zero");
    if (degree < 1) throw Error(errc::shape_mismatch, "projective degree must be positive");
    if (affine_total_degree(g) > degree)
      throw Error(errc::shape_mismatch, "declared degree below the polynomial's total degree");
  }

  // The projection center [0 : 1 : 0] lies on the curve iff the pure x^N
  // monomial is absent, i.e. iff the x-degree falls short of the form degree.
  bool through_center() const { return g.degree() < total_degree; }
};

namespace plane_detail {

// grid[i][j] = coefficient of t^i x^j (i + j <= N by construction).
inline std::vector<std::vector<QuadScalar>> coeff_grid(const ProjCurve& c) {
  const int n = c.total_degree;
  std::vector<std::vector<QuadScalar>> grid(n + 1, std::vector<QuadScalar>(n + 1, QuadScalar(0)));
  for (int j = 0; j <= c.g.degree(); ++j)
    for (int i = 0; i <= c.g.c[j].degree(); ++i) grid[i][j] = c.g.c[j].coeff(i);
  return grid;
}

inline BiPoly from_columns(std::vector<std::vector<QuadScalar>> cols) {
  BiPoly r;
  r.c.reserve(cols.size());
  for (auto& col : cols) r.c.push_back(UPoly(std::move(col)));
  r.normalize();
  return r;
}

}  // namespace plane_detail

// Swap the roles of the two variables.
inline BiPoly bipoly_transpose(const BiPoly& g) {
  int inner = -1;
  for (const auto& cj : g.c) inner = std::max(inner, cj.degree());
  std::vector<std::vector<QuadScalar>> cols(inner + 1);
  for (int i = 0; i <= inner; ++i) {
    std::vector<QuadScalar> col(g.c.size(), QuadScalar(0));
    for (std::size_t j = 0; j < g.c.size(); ++j) col[j] = g.c[j].coeff(i);
    cols[i] = std::move(col);
  }
  return plane_detail::from_columns(std::move(cols));
}

// Chart T = 1 of the homogenization: a polynomial in (z, x), z the inner
// variable.  The fiber z = 0 carries the points at t = infinity other than
// the projection center.
inline BiPoly chart_away_from_t(const ProjCurve& c) {
  const auto grid = plane_detail::coeff_grid(c);
  const int n = c.total_degree;
  std::vector<std::vector<QuadScalar>> cols(n + 1, std::vector<QuadScalar>(n + 1, QuadScalar(0)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j + i <= n; ++j) cols[j][n - i - j] = cols[j][n - i - j] + grid[i][j];
  return plane_detail::from_columns(std::move(cols));
}

// Chart X = 1 of the homogenization: a polynomial in (t, z), z the outer
// variable.  The projection center is the origin of this chart.
inline BiPoly chart_away_from_x(const ProjCurve& c) {
  const auto grid = plane_detail::coeff_grid(c);
  const int n = c.total_degree;
  std::vector<std::vector<QuadScalar>> cols(n + 1, std::vector<QuadScalar>(n + 1, QuadScalar(0)));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j + i <= n; ++j) cols[n - i - j][i] = cols[n - i - j][i] + grid[i][j];
  return plane_detail::from_columns(std::move(cols));
}

// Homogeneous membership test for a projective point [T : X : Z].
inline bool passes_through(const ProjCurve& c, const QuadScalar& t, const QuadScalar& x,
                           const QuadScalar& z) {
  const QuadScalar zero(0);
  if (t == zero && x == zero && z == zero)
    throw Error(errc::shape_mismatch, "projective point must have a nonzero coordinate");
  const auto grid = plane_detail::coeff_grid(c);
  const int n = c.total_degree;
  auto pw = [](const QuadScalar& b, int e) {
    QuadScalar r(1);
    for (int k = 0; k < e; ++k) r = r * b;
    return r;
  };
  QuadScalar acc(0);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j + i <= n; ++j) {
      if (grid[i][j] == zero) continue;
      acc = acc + grid[i][j] * pw(t, i) * pw(x, j) * pw(z, n - i - j);
    }
  return acc == zero;
}

namespace plane_detail {

struct ContactData {
  UPoly res;                                    // nonzero resultant in t
  SquarefreeDecomposition<QuadScalar> sqf;      // of res
  int drop = 0;                                 // multiplicity on the fiber at infinity
};

inline ContactData contact_data(const ProjCurve& a, const ProjCurve& b) {
  if (a.through_center() && b.through_center())
    throw Error(errc::center_on_both_curves,
                "both curves pass through the projection center [0:1:0]");
  ContactData out;
  out.res = resultant_x(a.g, b.g);
  if (out.res.is_zero())
    throw Error(errc::common_component, "the curves share a component");
  out.drop = a.total_degree * b.total_degree - out.res.degree();
  if (out.drop < 0)
    throw Error(errc::shape_mismatch, "resultant degree exceeds the degree bound");
  out.sqf = squarefree_decomposition(out.res);
  return out;
}

}  // namespace plane_detail

// Fiber-by-fiber intersection multiplicities of two curves without common
// component, one entry per fiber of the projection from [0:1:0], sorted.
inline std::vector<int> homogeneous_resultant_profile(const ProjCurve& a, const ProjCurve& b) {
  const auto data = plane_detail::contact_data(a, b);
  std::vector<int> profile;
  for (const auto& [f, e] : data.sqf.factors)
    profile.insert(profile.end(), static_cast<std::size_t>(f.degree()), e);
  if (data.drop > 0) profile.push_back(data.drop);
  std::sort(profile.begin(), profile.end());
  return profile;
}

// Degree of gcd(g, h) in K[t]/(m)[x] for squarefree m; nullopt when a leading
// coefficient fails to be invertible (a zero divisor splits the fiber) or the
// reductions vanish.
inline std::optional<int> fiber_gcd_degree(const BiPoly& g, const BiPoly& h, const UPoly& m) {
  if (m.degree() < 1)
    throw Error(errc::non_squarefree_modulus, "modulus must have positive degree");
  if (upoly_gcd(m, m.derivative()).degree() > 0)
    throw Error(errc::non_squarefree_modulus, "modulus has a repeated root");

  auto reduce = [&](const BiPoly& p) {
    std::vector<UPoly> r;
    r.reserve(p.c.size());
    for (const auto& cj : p.c) r.push_back(poly_divrem(cj, m).second);
    while (!r.empty() && r.back().is_zero()) r.pop_back();
    return r;
  };
  std::vector<UPoly> va = reduce(g), vb = reduce(h);
  if (va.empty() && vb.empty()) return std::nullopt;

  auto rem_mod = [&](std::vector<UPoly> num, const std::vector<UPoly>& den,
                     const UPoly& lead_inv) -> std::vector<UPoly> {
    // den's leading coefficient has inverse lead_inv; cancel num's top entry
    // until its x-degree falls below den's.
    while (num.size() >= den.size()) {
      const UPoly q = poly_divrem(num.back() * lead_inv, m).second;
      const std::size_t shift = num.size() - den.size();
      for (std::size_t i = 0; i < den.size(); ++i)
        num[shift + i] = poly_divrem(num[shift + i] - q * den[i], m).second;
      while (!num.empty() && num.back().is_zero()) num.pop_back();
    }
    return num;
  };

  while (!vb.empty()) {
    const UPoly lc = vb.back();
    const auto eg = poly_exgcd(lc, m);
    if (eg.g.degree() > 0) return std::nullopt;  // lc is a zero divisor mod m
    const UPoly lead_inv = poly_divrem(eg.s, m).second;
    va = rem_mod(std::move(va), vb, lead_inv);
    std::swap(va, vb);
  }
  if (va.empty()) return std::nullopt;
  return static_cast<int>(va.size()) - 1;
}

enum class Tri { yes, no, indeterminate };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    default: return "indeterminate";
  }
}

struct ContactCheck {
  Tri verdict = Tri::indeterminate;
  std::vector<int> profile;  // sorted fiber multiplicities
  std::string detail;        // populated when verdict != yes
};

// Certifies that every intersection of the two curves has even multiplicity
// and is alone in its fiber.  "no" is definitive (an odd fiber multiplicity
// exists); "indeterminate" means a multiple fiber could not be certified to
// hold a single intersection point.
inline ContactCheck even_contact_check(const ProjCurve& a, const ProjCurve& b) {
  const auto data = plane_detail::contact_data(a, b);
  ContactCheck out;
  for (const auto& [f, e] : data.sqf.factors)
    out.profile.insert(out.profile.end(), static_cast<std::size_t>(f.degree()), e);
  if (data.drop > 0) out.profile.push_back(data.drop);
  std::sort(out.profile.begin(), out.profile.end());

  for (int e : out.profile)
    if (e % 2 != 0) {
      out.verdict = Tri::no;
      out.detail = "a fiber carries odd intersection multiplicity " + std::to_string(e);
      return out;
    }

  for (const auto& [f, e] : data.sqf.factors) {
    const auto d = fiber_gcd_degree(a.g, b.g, f);
    if (!d) {
      out.verdict = Tri::indeterminate;
      out.detail = "zero divisor while certifying the fiber of " + render_upoly(f);
      return out;
    }
    if (*d != 1) {
      out.verdict = Tri::indeterminate;
      out.detail = "fiber of " + render_upoly(f) + " holds a locus of degree " +
                   std::to_string(*d) + ", not a single point";
      return out;
    }
  }
  if (data.drop > 0) {
    // flip to the chart T = 1, where the fiber at infinity is z = 0
    const auto d = fiber_gcd_degree(chart_away_from_t(a), chart_away_from_t(b), UPoly::var());
    if (!d || *d != 1) {
      out.verdict = Tri::indeterminate;
      out.detail = "the fiber at infinity could not be certified to hold a single point";
      return out;
    }
  }
  out.verdict = Tri::yes;
  return out;
}

inline Tri even_contact(const ProjCurve& a, const ProjCurve& b) {
  return even_contact_check(a, b).verdict;
}

// Smoothness of the projective curve, decided chart by chart: in each of the
// three standard charts the polynomial and its two partials must not share a
// zero, which elimination reduces to a gcd of two resultants being constant.
inline bool smoothness_check(const ProjCurve& c) {
  const BiPoly charts[3] = {c.g, chart_away_from_t(c), chart_away_from_x(c)};
  for (const BiPoly& raw : charts) {
    if (affine_total_degree(raw) <= 0) continue;  // no curve points in this chart
    BiPoly g = raw;
    if (g.degree() < 1) g = bipoly_transpose(g);  // eliminate a variable that appears
    const UPoly r1 = resultant_x(g, g.derivative());
    const UPoly r2 = resultant_x(g, bipoly_dt(g));
    if (r1.is_zero() && r2.is_zero()) return false;
    if (upoly_gcd(r1, r2).degree() > 0) return false;
  }
  return true;
}

// --- scenario runner ---------------------------------------------------------

struct ReportItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct StructuredReport {
  std::string scenario;
  std::vector<ReportItem> items;

  bool all_passed() const {
    for (const auto& it : items)
      if (!it.passed) return false;
    return true;
  }
};

namespace plane_detail {

inline void push(StructuredReport& rep, std::string name, bool ok, std::string detail_on_fail) {
  rep.items.push_back({std::move(name), ok, ok ? std::string() : std::move(detail_on_fail)});
}

inline std::string with_param(const char* base, const char* var, const Rat& value) {
  return std::string(base) + "[" + var + "=" + rat_str(value) + "]";
}

inline bool points_on_curve(const ScenarioData& sc, std::string& why) {
  for (const auto& [name, p] : sc.points)
    if (!on_curve(sc.curve, p)) {
      why = "point " + name + " fails the curve equation";
      return false;
    }
  return true;
}

inline bool split_equals(const ScenarioData& sc, const std::string& cubic,
                         const std::string& other, long long m1, long long m2, std::string& why) {
  const SplitType got = splitting_type(sc.vectors.at(cubic), sc.vectors.at(other),
                                       sc.divisors.at(cubic), sc.divisors.at(other), sc.fibers);
  if (got.m1 == m1 && got.m2 == m2) return true;
  why = cubic + " against " + other + " split as (" + std::to_string(got.m1) + "," +
        std::to_string(got.m2) + "), expected (" + std::to_string(m1) + "," +
        std::to_string(m2) + ")";
  return false;
}

inline bool trisection_matches(const ScenarioData& sc, const MWPoint& anchor,
                               const QuadScalar& b0, const RFunc& b1, const XPoly& expected,
                               std::string& why) {
  const MumfordPair got = trisection_construct(sc.curve, anchor, b0, b1);
  if (!(got.u == expected)) {
    why = "constructed u = " + render_xpoly(got.u) + ", stored family gives " +
          render_xpoly(expected);
    return false;
  }
  const MWPoint back = class_point(got, sc.curve);
  if (back.infinity || !(back == anchor)) {
    why = "class point of the constructed pair is not the anchor";
    return false;
  }
  return true;
}

inline bool cubic_even_contact(const ScenarioData& sc, const XPoly& cubic, std::string& why) {
  const ProjCurve cc(bipoly_from_xpoly(cubic), 3);
  const ProjCurve q(sc.quartic, sc.quartic_degree);
  const ContactCheck chk = even_contact_check(cc, q);
  if (chk.verdict == Tri::yes) return true;
  why = std::string("even contact came back '") + tri_name(chk.verdict) + "': " + chk.detail;
  return false;
}

inline bool bitangent_three_points(const XPoly& cubic, std::string& why) {
  const RFunc at0 = cubic.coeff(0);  // restriction to the line x = 0
  if (!at0.is_polynomial()) {
    why = "restriction to x = 0 is not polynomial";
    return false;
  }
  const UPoly r = at0.num;
  if (r.degree() != 3) {
    why = "restriction to x = 0 has degree " + std::to_string(r.degree()) + ", expected 3";
    return false;
  }
  if (upoly_gcd(r, r.derivative()).degree() > 0) {
    why = "restriction to x = 0 has a repeated root";
    return false;
  }
  return true;
}

inline StructuredReport run_case_i(const std::vector<Rat>& params) {
  const ScenarioData sc = scenario_case_i();
  StructuredReport rep;
  rep.scenario = sc.name;
  std::string why;

  push(rep, "points_on_curve", points_on_curve(sc, why), why);

  {
    const MWPoint dbl = scalar_mul(sc.curve, 2, sc.points.at("P14"));
    push(rep, "group_law_double_p14", dbl == sc.points.at("TwoP14"),
         "[2]P14 disagrees with the stored value");
    bool torsion = true;
    for (const char* name : {"T0", "T1", "T2"})
      torsion = torsion && scalar_mul(sc.curve, 2, sc.points.at(name)).infinity;
    push(rep, "group_law_torsion", torsion, "a fiber-order-two section fails [2]T = O");
  }

  {
    bool ok = split_equals(sc, "E1", "Conic2P13", 2, 4, why) &&
              split_equals(sc, "E2", "Conic2P13", 3, 3, why) &&
              split_equals(sc, "E1", "Conic2P14", 3, 3, why) &&
              split_equals(sc, "E2", "Conic2P14", 2, 4, why);
    push(rep, "splitting_types", ok, why);
  }

  const auto nodes = quartic_nodes_case_i();
  for (const Rat& c : params) {
    const XPoly fam1 = reference_cubic_case_i_p13(c);
    const XPoly fam2 = reference_cubic_case_i_p14(c);

    push(rep, with_param("trisection_p13", "c", c),
         trisection_matches(sc, sc.points.at("P13"), QuadScalar(1), RFunc(QuadScalar(c)), fam1,
                            why),
         why);
    {
      // slope line through P14: b1 = -(2*sqrt(2) + 3)t + c
      const UPoly b1 =
          UPoly::var() * QuadScalar(Rat(-3), Rat(-2), 2) + UPoly(QuadScalar(c));
      push(rep, with_param("trisection_p14", "c", c),
           trisection_matches(sc, sc.points.at("P14"), QuadScalar(1), RFunc(b1), fam2, why), why);
    }

    {
      bool ok1 = smoothness_check(ProjCurve(bipoly_from_xpoly(fam1), 3));
      bool ok2 = smoothness_check(ProjCurve(bipoly_from_xpoly(fam2), 3));
      push(rep, with_param("smoothness", "c", c), ok1 && ok2,
           std::string(ok1 ? "second" : "first") + " family member is singular");
    }

    {
      bool ok1 = cubic_even_contact(sc, fam1, why);
      std::string why1 = why;
      bool ok2 = cubic_even_contact(sc, fam2, why);
      push(rep, with_param("even_contact", "c", c), ok1 && ok2, ok1 ? why : why1);
    }

    {
      // family through P13 passes the nodes n1, n3; family through P14 the nodes n1, n4
      const ProjCurve c1(bipoly_from_xpoly(fam1), 3);
      const ProjCurve c2(bipoly_from_xpoly(fam2), 3);
      auto at = [&](const ProjCurve& cc, std::size_t k) {
        return passes_through(cc, QuadScalar(nodes[k].first), QuadScalar(nodes[k].second),
                              QuadScalar(1));
      };
      bool ok = at(c1, 1) && at(c1, 3) && at(c2, 1) && at(c2, 4);
      push(rep, with_param("node_membership", "c", c), ok,
           "a family member misses one of its assigned nodes");
    }
  }
  return rep;
}

inline StructuredReport run_case_ii(const std::vector<Rat>& params) {
  const ScenarioData sc = scenario_case_ii();
  StructuredReport rep;
  rep.scenario = sc.name;
  std::string why;

  push(rep, "points_on_curve", points_on_curve(sc, why), why);

  {
    const MWPoint q1 = fold_add(
        sc.curve, {sc.points.at("P12"), sc.points.at("P13"), sc.points.at("P23")});
    push(rep, "group_law_q1", q1 == sc.points.at("Q1"),
         "P12 + P13 + P23 disagrees with the stored Q1");
    const MWPoint q2 = fold_add(sc.curve, {negate(sc.curve, sc.points.at("P12")),
                                           sc.points.at("P13"), sc.points.at("P23")});
    push(rep, "group_law_q2", q2 == sc.points.at("Q2"),
         "-P12 + P13 + P23 disagrees with the stored Q2");
    const MWPoint p14 = add(sc.curve, sc.points.at("P23"), sc.points.at("T"));
    const bool torsion = scalar_mul(sc.curve, 2, sc.points.at("T")).infinity;
    push(rep, "group_law_torsion_shift", torsion && p14 == sc.points.at("P14"),
         "P23 + T disagrees with the stored P14");
  }

  {
    bool ok = split_equals(sc, "E1", "Q1_line", 0, 3, why) &&
              split_equals(sc, "E2", "Q1_line", 1, 2, why) &&
              split_equals(sc, "E1", "Q2_line", 1, 2, why) &&
              split_equals(sc, "E2", "Q2_line", 0, 3, why);
    push(rep, "splitting_types", ok, why);
  }

  {
    // at s = 0 both families degenerate to the triangle of chords
    const XPoly tri = reference_cubic_case_ii_q1(Rat(0));
    bool ok = reference_cubic_case_ii_q2(Rat(0)) == tri;
    XPoly prod(RFunc(1));
    for (const BiPoly& line : triangle_lines_case_ii()) prod *= xpoly_from_bipoly(line);
    ok = ok && prod == tri;
    push(rep, "triangle_factorization", ok,
         "the degenerate member is not the product of the three chords");
  }

  for (const Rat& s : params) {
    const XPoly fam1 = reference_cubic_case_ii_q1(s);
    const XPoly fam2 = reference_cubic_case_ii_q2(s);
    const UPoly t = UPoly::var();

    {
      const UPoly b1 = t * QuadScalar(11) + UPoly(QuadScalar(s - 36));
      push(rep, with_param("trisection_q1", "s", s),
           trisection_matches(sc, sc.points.at("negQ1"), QuadScalar(Rat(1, 6)), RFunc(b1), fam1,
                              why),
           why);
    }
    {
      const UPoly b1 = t * QuadScalar(6) + UPoly(QuadScalar(s - 6));
      push(rep, with_param("trisection_q2", "s", s),
           trisection_matches(sc, sc.points.at("negQ2"), QuadScalar(1), RFunc(b1), fam2, why),
           why);
    }

    {
      bool ok1 = smoothness_check(ProjCurve(bipoly_from_xpoly(fam1), 3));
      bool ok2 = smoothness_check(ProjCurve(bipoly_from_xpoly(fam2), 3));
      push(rep, with_param("smoothness", "s", s), ok1 && ok2,
           std::string(ok1 ? "second" : "first") + " family member is singular");
    }

    {
      bool ok1 = cubic_even_contact(sc, fam1, why);
      std::string why1 = why;
      bool ok2 = cubic_even_contact(sc, fam2, why);
      push(rep, with_param("even_contact", "s", s), ok1 && ok2, ok1 ? why : why1);
    }

    {
      bool ok1 = bitangent_three_points(fam1, why);
      std::string why1 = why;
      bool ok2 = bitangent_three_points(fam2, why);
      push(rep, with_param("bitangent_points", "s", s), ok1 && ok2,
           (ok1 ? why : why1) + "; the split (0,3)+(1,2) predicts 3 residual points");
    }
  }
  return rep;
}

}  // namespace plane_detail

inline StructuredReport verify_scenario(const std::string& name, const std::vector<Rat>& params) {
  if (name == "case_i") return plane_detail::run_case_i(params);
  if (name == "case_ii") return plane_detail::run_case_ii(params);
  throw Error(errc::unknown_scenario, "unknown scenario '" + name + "'");
}

}  // namespace mwtrisect
