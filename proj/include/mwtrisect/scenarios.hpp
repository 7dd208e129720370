#pragma once

#include <map>
#include <string>
#include <vector>

#include "mwtrisect/curve.hpp"
#include "mwtrisect/lattice.hpp"
#include "mwtrisect/rfunc.hpp"

namespace mwtrisect {

// Built-in worked examples: two rational elliptic surfaces whose branch
// quartic splits into two conics, together with the section data, fiber
// configuration, Mordell-Weil coordinates and reference trisection families
// used by the scenario runner and the test suite.

namespace scenario_detail {

inline UPoly up(std::vector<QuadScalar> asc) { return UPoly(std::move(asc)); }

inline XPoly xp(std::vector<RFunc> asc) { return XPoly(std::move(asc)); }

inline RFunc rf(const UPoly& p) { return RFunc(p); }

}  // namespace scenario_detail

struct ScenarioData {
  std::string name;
  WCurve curve;
  std::map<std::string, MWPoint> points;
  FiberConfig fibers;
  Mat gram;
  std::map<std::string, MWVector> vectors;
  std::map<std::string, DivisorData> divisors;
  BiPoly quartic;           // defining polynomial of the branch quartic
  int quartic_degree = 0;   // its total degree as a plane projective curve

  ScenarioData(std::string n, WCurve c) : name(std::move(n)), curve(std::move(c)) {}
};

// ---------------------------------------------------------------------------
// Case (i): quartic (x - t^2)(x^2 + 4x - 9t^2 + 4), two nodal conics.
// ---------------------------------------------------------------------------

inline ScenarioData scenario_case_i() {
  using namespace scenario_detail;

  const UPoly t = UPoly::var();
  const XPoly x = XPoly::var();
  const QuadScalar r2 = QuadScalar::sqrt_of(2);

  // f = (x - t^2)(x + 3t + 2)(x - 3t + 2)
  const XPoly f = (x - XPoly(rf(t * t))) * (x + XPoly(rf(t * QuadScalar(3) + UPoly(2)))) *
                  (x - XPoly(rf(t * QuadScalar(3) - UPoly(2))));
  ScenarioData sc{"case_i", WCurve(f.coeff(2), f.coeff(1), f.coeff(0))};
  sc.quartic = bipoly_from_xpoly(f);
  sc.quartic_degree = 4;

  auto pt = [](const UPoly& px, const UPoly& py) { return MWPoint::affine(rf(px), rf(py)); };

  sc.points["P13"] = pt(up({1}), (t + UPoly(1)) * (t - UPoly(1)) * QuadScalar(-3));
  sc.points["P14"] = pt(t + UPoly(2), (t + UPoly(1)) * (t - UPoly(2)) * (r2 * QuadScalar(-2)));
  sc.points["T0"] = pt(t * t, up({}));
  sc.points["T1"] = pt(t * QuadScalar(-3) - UPoly(2), up({}));
  sc.points["T2"] = pt(t * QuadScalar(3) - UPoly(2), up({}));
  // [2]P14, in closed form.
  sc.points["TwoP14"] =
      pt(up({0, 0, Rat(9, 8)}), up({0, QuadScalar(Rat(0), Rat(1, 2), 2), 0, QuadScalar(Rat(0), Rat(-9, 32), 2)}));

  sc.fibers.chi = 1;
  for (const char* label : {"inf", "n0", "n1", "n2", "n3", "n4"})
    sc.fibers.fibers.push_back(Fiber{label, {{Rat(-2)}}});

  sc.gram = {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)}};
  auto vec = [&](std::vector<Rat> coords, std::string tag = "") {
    return MWVector{std::move(coords), sc.gram, std::move(tag)};
  };
  sc.vectors["P13"] = vec({1, 0});
  sc.vectors["P14"] = vec({0, 1});
  sc.vectors["TwoP14"] = vec({0, 2});
  sc.vectors["T0"] = vec({0, 0}, "2-torsion");
  sc.vectors["T1"] = vec({0, 0}, "2-torsion");
  sc.vectors["T2"] = vec({0, 0}, "2-torsion");
  sc.vectors["E1"] = vec({1, 0});
  sc.vectors["E2"] = vec({0, 1});
  sc.vectors["Conic2P13"] = vec({2, 0});
  sc.vectors["Conic2P14"] = vec({0, 2});

  auto contacts = [&](std::map<std::string, long long> nz) {
    std::vector<std::vector<long long>> c;
    for (const auto& fib : sc.fibers.fibers) {
      auto it = nz.find(fib.label);
      c.push_back({it == nz.end() ? 0 : it->second});
    }
    return c;
  };
  sc.divisors["E1"] = DivisorData{3, 0, contacts({{"inf", 3}, {"n1", 1}, {"n3", 1}}), 3};
  sc.divisors["E2"] = DivisorData{3, 0, contacts({{"inf", 3}, {"n1", 1}, {"n4", 1}}), 3};
  sc.divisors["Conic2P13"] = DivisorData{2, 0, contacts({{"inf", 2}}), 0};
  sc.divisors["Conic2P14"] = DivisorData{2, 0, contacts({{"inf", 2}}), 0};
  return sc;
}

// Cubic family through P13 of case (i); parameter c is the free coefficient
// of the trisecting slope line.  Coefficients of u = x^3 + c2 x^2 + c1 x + c0.
inline XPoly reference_cubic_case_i_p13(const Rat& c) {
  using namespace scenario_detail;
  const UPoly c2 = up({QuadScalar(-2 * c - 2)});
  const UPoly c1 = up({QuadScalar(c * c + 2 * c - 11), QuadScalar(0), QuadScalar(7)});
  const UPoly c0 = up({QuadScalar(-(c - 3) * (c - 3)), QuadScalar(0), QuadScalar(14 - 6 * c)});
  return xp({rf(c0), rf(c1), rf(c2), RFunc(1)});
}

// Cubic family through P14 of case (i); coefficients live in Q(sqrt(2)).
inline XPoly reference_cubic_case_i_p14(const Rat& c) {
  using namespace scenario_detail;
  auto qs = [](Rat a, Rat b) { return QuadScalar(a, b, 2); };
  const UPoly c2 = up({qs(-2 * c - 3, 0), qs(5, 4)});
  const UPoly c1 = up({qs(c * c + 4 * c - 6, -8), qs(-4 * c - 13, -4 * c - 12), qs(12, 12)});
  const UPoly c0 = up({qs(-2 * c * c - 16, 8 * c), qs(-c * c + 12 * c - 40, 12 * c - 24), qs(6 * c - 36, -36)});
  return xp({rf(c0), rf(c1), rf(c2), RFunc(1)});
}

// ---------------------------------------------------------------------------
// Case (ii): quartic (x - t^2)(x^2 - 10tx + 25x - 36), four nodes.
// ---------------------------------------------------------------------------

inline ScenarioData scenario_case_ii() {
  using namespace scenario_detail;

  const UPoly t = UPoly::var();
  const XPoly x = XPoly::var();

  // f = (x - t^2)(x^2 + (25 - 10t)x - 36)
  const XPoly f = (x - XPoly(rf(t * t))) *
                  (x * x + x * rf(t * QuadScalar(-10) + UPoly(25)) - XPoly(RFunc(36)));
  ScenarioData sc{"case_ii", WCurve(f.coeff(2), f.coeff(1), f.coeff(0))};
  sc.quartic = bipoly_from_xpoly(f);
  sc.quartic_degree = 4;

  auto pt = [](const UPoly& px, const UPoly& py) { return MWPoint::affine(rf(px), rf(py)); };

  sc.points["P12"] = pt(t * QuadScalar(5) - UPoly(6), (t - UPoly(2)) * (t - UPoly(3)) * QuadScalar(5));
  sc.points["P13"] = pt(t * QuadScalar(9) - UPoly(18), (t - UPoly(3)) * (t - UPoly(6)) * QuadScalar(3));
  sc.points["P23"] = pt(t * QuadScalar(8) - UPoly(12), (t - UPoly(2)) * (t - UPoly(6)) * QuadScalar(4));
  sc.points["P14"] = pt(t * QuadScalar(2) + UPoly(3), (t - UPoly(3)) * (t + UPoly(1)) * QuadScalar(-4));
  sc.points["T"] = pt(t * t, up({}));
  sc.points["Q1"] = pt(up({}), t * QuadScalar(-6));
  sc.points["Q2"] = pt(t * QuadScalar(10) - UPoly(25), t * QuadScalar(-6) + UPoly(30));
  sc.points["negQ1"] = pt(up({}), t * QuadScalar(6));
  sc.points["negQ2"] = pt(t * QuadScalar(10) - UPoly(25), t * QuadScalar(6) - UPoly(30));

  sc.fibers.chi = 1;
  for (const char* label : {"inf", "n1", "n2", "n3", "n4"})
    sc.fibers.fibers.push_back(Fiber{label, {{Rat(-2)}}});

  sc.gram = {{Rat(1, 2), Rat(0), Rat(0)}, {Rat(0), Rat(1, 2), Rat(0)}, {Rat(0), Rat(0), Rat(1, 2)}};
  auto vec = [&](std::vector<Rat> coords, std::string tag = "") {
    return MWVector{std::move(coords), sc.gram, std::move(tag)};
  };
  sc.vectors["P12"] = vec({1, 0, 0});
  sc.vectors["P13"] = vec({0, 1, 0});
  sc.vectors["P23"] = vec({0, 0, 1});
  sc.vectors["P14"] = vec({0, 0, 1}, "2-torsion");
  sc.vectors["T"] = vec({0, 0, 0}, "2-torsion");
  sc.vectors["Q1"] = vec({1, 1, 1});
  sc.vectors["Q2"] = vec({-1, 1, 1});
  sc.vectors["negQ1"] = vec({-1, -1, -1});
  sc.vectors["negQ2"] = vec({1, -1, -1});
  sc.vectors["E1"] = vec({1, 1, 1});
  sc.vectors["E2"] = vec({-1, 1, 1});
  sc.vectors["Q1_line"] = vec({1, 1, 1});
  sc.vectors["Q2_line"] = vec({-1, 1, 1});
  sc.vectors["L12_line"] = vec({1, 0, 0});
  sc.vectors["L13_line"] = vec({0, 1, 0});
  sc.vectors["L23_line"] = vec({0, 0, 1});
  sc.vectors["L14_line"] = vec({0, 0, 1});

  auto contacts = [&](std::map<std::string, long long> nz) {
    std::vector<std::vector<long long>> c;
    for (const auto& fib : sc.fibers.fibers) {
      auto it = nz.find(fib.label);
      c.push_back({it == nz.end() ? 0 : it->second});
    }
    return c;
  };
  sc.divisors["E1"] = DivisorData{3, 0, contacts({{"inf", 3}}), 3};
  sc.divisors["E2"] = DivisorData{3, 0, contacts({{"inf", 3}}), 3};
  sc.divisors["Q1_line"] = DivisorData{1, 0, contacts({{"inf", 1}}), -1};
  sc.divisors["Q2_line"] = DivisorData{1, 0, contacts({{"inf", 1}}), -1};
  sc.divisors["L12_line"] = DivisorData{1, 0, contacts({{"inf", 1}, {"n1", 1}, {"n2", 1}}), -1};
  sc.divisors["L13_line"] = DivisorData{1, 0, contacts({{"inf", 1}, {"n1", 1}, {"n3", 1}}), -1};
  sc.divisors["L23_line"] = DivisorData{1, 0, contacts({{"inf", 1}, {"n2", 1}, {"n3", 1}}), -1};
  sc.divisors["L14_line"] = DivisorData{1, 0, contacts({{"inf", 1}, {"n1", 1}, {"n4", 1}}), -1};
  return sc;
}

// Cubic family anchored at -Q1 of case (ii), parameter s.
inline XPoly reference_cubic_case_ii_q1(const Rat& s) {
  using namespace scenario_detail;
  const UPoly c2 = up({QuadScalar(36 - 2 * s), QuadScalar(-22)});
  const UPoly c1 = up({QuadScalar(s * s - 72 * s + 396), QuadScalar(22 * s - 504), QuadScalar(157)});
  const UPoly c0 =
      up({QuadScalar(1296), QuadScalar(72 * s - 2592), QuadScalar(1692), QuadScalar(-360)});
  return xp({rf(c0), rf(c1), rf(c2), RFunc(1)});
}

// Cubic family anchored at -Q2 of case (ii), parameter s.
inline XPoly reference_cubic_case_ii_q2(const Rat& s) {
  using namespace scenario_detail;
  const UPoly c2 = up({QuadScalar(36 - 2 * s), QuadScalar(-22)});
  const UPoly c1 = up({QuadScalar(s * s - 62 * s + 396), QuadScalar(32 * s - 504), QuadScalar(157)});
  const UPoly c0 = up({QuadScalar(25 * s * s - 360 * s + 1296),
                       QuadScalar(-10 * s * s + 432 * s - 2592), QuadScalar(-120 * s + 1692),
                       QuadScalar(-360)});
  return xp({rf(c0), rf(c1), rf(c2), RFunc(1)});
}

// The three chord lines of the degenerate (s = 0) member of the Q1 family,
// as plane curves x - (alpha t + beta) = 0.
inline std::vector<BiPoly> triangle_lines_case_ii() {
  const UPoly t = UPoly::var();
  return {
      BiPoly({t * QuadScalar(-5) + UPoly(6), UPoly(1)}),    // x = 5t - 6
      BiPoly({t * QuadScalar(-9) + UPoly(18), UPoly(1)}),   // x = 9t - 18
      BiPoly({t * QuadScalar(-8) + UPoly(12), UPoly(1)}),   // x = 8t - 12
  };
}

// The bitangent line x = 0 carrying Q1 and -Q1.
inline BiPoly bitangent_line_case_ii() { return BiPoly({UPoly(0), UPoly(1)}); }

// Nodes of the branch quartic, (t, x) pairs, in fiber-label order n0..n4.
inline std::vector<std::pair<Rat, Rat>> quartic_nodes_case_i() {
  return {{Rat(0), Rat(-2)}, {Rat(-1), Rat(1)}, {Rat(-2), Rat(4)}, {Rat(1), Rat(1)}, {Rat(2), Rat(4)}};
}

inline std::vector<std::pair<Rat, Rat>> quartic_nodes_case_ii() {
  return {{Rat(3), Rat(9)}, {Rat(2), Rat(4)}, {Rat(6), Rat(36)}, {Rat(-1), Rat(1)}};
}

}  // namespace mwtrisect
