#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mwtrisect/planecurves.hpp"

using namespace mwtrisect;

namespace {

BiPoly bp(std::vector<UPoly> asc) { return BiPoly(std::move(asc)); }

const UPoly T = UPoly::var();

BiPoly quartic_ii() { return scenario_case_ii().quartic; }

ProjCurve cubic_curve(const XPoly& fam) { return ProjCurve(bipoly_from_xpoly(fam), 3); }

// random curve with unit x-top coefficient, so its total degree equals its
// x-degree and it avoids the projection center
BiPoly random_centered_away(std::mt19937_64& rng, int deg) {
    std::uniform_int_distribution<long long> coeff(-3, 3);
    std::vector<UPoly> cols;
    for (int j = 0; j < deg; ++j) {
        std::uniform_int_distribution<int> tdeg(-1, deg - j);
        const int dt = tdeg(rng);
        std::vector<QuadScalar> c;
        for (int i = 0; i <= dt; ++i) c.emplace_back(coeff(rng));
        cols.push_back(UPoly(std::move(c)));
    }
    cols.push_back(UPoly(1));
    return bp(std::move(cols));
}

}  // namespace

TEST_CASE("projective curve construction") {
    REQUIRE_THROWS_AS(ProjCurve(BiPoly(), 1), Error);
    REQUIRE_THROWS_AS(ProjCurve(bp({T, UPoly(1)}), 0), Error);
    REQUIRE_THROWS_AS(ProjCurve(bp({T * T, UPoly(1)}), 1), Error);  // declared too low
    // padding up is allowed: the line plus the line at infinity
    const ProjCurve padded(bp({UPoly(), UPoly(1)}), 2);
    REQUIRE(padded.through_center());
    const ProjCurve line(bp({UPoly(), UPoly(1)}), 1);
    REQUIRE(!line.through_center());
    const ProjCurve conic(bp({-(T * T), UPoly(1)}), 2);
    REQUIRE(conic.through_center());  // x - t^2 misses the x^2 monomial
    REQUIRE(ProjCurve(quartic_ii(), 4).through_center());
}

TEST_CASE("homogeneous membership") {
    const ProjCurve q(quartic_ii(), 4);
    // the four nodes, [t : x : 1]
    for (auto [t0, x0] : quartic_nodes_case_ii())
        REQUIRE(passes_through(q, QuadScalar(t0), QuadScalar(x0), QuadScalar(1)));
    REQUIRE(!passes_through(q, QuadScalar(1), QuadScalar(2), QuadScalar(1)));
    // the projection center and scale invariance
    REQUIRE(passes_through(q, QuadScalar(0), QuadScalar(1), QuadScalar(0)));
    REQUIRE(passes_through(q, QuadScalar(6), QuadScalar(18), QuadScalar(2)));
    REQUIRE_THROWS_AS(passes_through(q, QuadScalar(0), QuadScalar(0), QuadScalar(0)), Error);
}

TEST_CASE("transpose and charts") {
    const BiPoly g = bp({T * T, T + UPoly(3), UPoly(5)});
    REQUIRE(bipoly_transpose(bipoly_transpose(g)) == g);
    // charts of the conic x - t^2 (projectively X Z - T^2):
    // away from t it reads x z - 1, away from x it reads z - t^2
    const ProjCurve conic(bp({-(T * T), UPoly(1)}), 2);
    const BiPoly chart_t = chart_away_from_t(conic);
    REQUIRE(chart_t == bp({UPoly(-1), UPoly::var()}));
    const BiPoly chart_x = chart_away_from_x(conic);
    REQUIRE(chart_x == bp({-(T * T), UPoly(1)}));
}

TEST_CASE("intersection profiles of the worked arrangements") {
    const ProjCurve q(quartic_ii(), 4);

    // the two conics forming the quartic meet transversally at the four nodes
    const ProjCurve c1(bp({-(T * T), UPoly(1)}), 2);
    const ProjCurve c2(bp({UPoly(-36), T * QuadScalar(-10) + UPoly(25), UPoly(1)}), 2);
    REQUIRE(homogeneous_resultant_profile(c1, c2) == std::vector<int>{1, 1, 1, 1});

    // the bitangent x = 0 touches the quartic twice: once at t = 0, once at infinity
    const ProjCurve l1(bitangent_line_case_ii(), 1);
    REQUIRE(homogeneous_resultant_profile(l1, q) == std::vector<int>{2, 2});

    // two chords meet in one point
    const auto lines = triangle_lines_case_ii();
    const ProjCurve l12(lines[0], 1), l13(lines[1], 1);
    REQUIRE(homogeneous_resultant_profile(l12, l13) == std::vector<int>{1});

    // a smooth family member has even contact everywhere: six tangencies
    const ProjCurve fam(cubic_curve(reference_cubic_case_ii_q1(Rat(1))));
    REQUIRE(homogeneous_resultant_profile(fam, q) == std::vector<int>{2, 2, 2, 2, 2, 2});
}

TEST_CASE("profile guards") {
    const ProjCurve q(quartic_ii(), 4);
    // both curves through the center: elimination from [0:1:0] cannot see it
    try {
        homogeneous_resultant_profile(q, q);
        FAIL("expected rejection");
    } catch (const Error& e) {
        REQUIRE(e.code == errc::center_on_both_curves);
    }
    // shared component
    const ProjCurve fam(cubic_curve(reference_cubic_case_ii_q1(Rat(1))));
    const BiPoly prod = bipoly_from_xpoly(reference_cubic_case_ii_q1(Rat(1))) *
                        bp({T * QuadScalar(-5) + UPoly(6), UPoly(1)});
    try {
        homogeneous_resultant_profile(fam, ProjCurve(prod, 4));
        FAIL("expected rejection");
    } catch (const Error& e) {
        REQUIRE(e.code == errc::common_component);
    }
}

TEST_CASE("Bezout sum rule on random center-avoiding pairs") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> degree(1, 3);
    int done = 0;
    while (done < 50) {
        const int m = degree(rng), n = degree(rng);
        const BiPoly g = random_centered_away(rng, m);
        const BiPoly h = random_centered_away(rng, n);
        if (!resultant_x(g, h).is_zero()) {
            const auto profile =
                homogeneous_resultant_profile(ProjCurve(g, m), ProjCurve(h, n));
            int sum = 0;
            for (int e : profile) sum += e;
            REQUIRE(sum == m * n);
            ++done;
        }
    }
}

TEST_CASE("gcd degree over a fiber") {
    const auto lines = triangle_lines_case_ii();
    const BiPoly& l12 = lines[0];  // x - (5t - 6), through the nodes at t = 3 and t = 2
    const BiPoly& l13 = lines[1];  // x - (9t - 18), through the nodes at t = 3 and t = 6

    REQUIRE(fiber_gcd_degree(l12, l13, T - UPoly(3)) == 1);  // both pass (3, 9)
    REQUIRE(fiber_gcd_degree(l12, l13, T - UPoly(2)) == 0);  // only one passes (2, 4)
    // over the split modulus the Euclid remainder 4(t - 3) is a zero divisor
    REQUIRE(!fiber_gcd_degree(l12, l13, (T - UPoly(2)) * (T - UPoly(3))).has_value());

    // the degenerate triangle shares a double locus with the quartic over t = 3
    const BiPoly tri = bipoly_from_xpoly(reference_cubic_case_ii_q1(Rat(0)));
    REQUIRE(fiber_gcd_degree(tri, quartic_ii(), T - UPoly(3)) == 2);

    REQUIRE_THROWS_AS(fiber_gcd_degree(l12, l13, UPoly(1)), Error);
    REQUIRE_THROWS_AS(fiber_gcd_degree(l12, l13, (T - UPoly(1)) * (T - UPoly(1))), Error);
}

TEST_CASE("even contact verdicts") {
    const ProjCurve q(quartic_ii(), 4);

    const ContactCheck good = even_contact_check(cubic_curve(reference_cubic_case_ii_q1(Rat(1))), q);
    REQUIRE(good.verdict == Tri::yes);
    REQUIRE(good.profile == std::vector<int>{2, 2, 2, 2, 2, 2});

    // bitangent: even everywhere, including the drop at infinity
    REQUIRE(even_contact(ProjCurve(bitangent_line_case_ii(), 1), q) == Tri::yes);

    // transversal crossings are odd
    const ProjCurve c1(bp({-(T * T), UPoly(1)}), 2);
    const ProjCurve c2(bp({UPoly(-36), T * QuadScalar(-10) + UPoly(25), UPoly(1)}), 2);
    const ContactCheck bad = even_contact_check(c1, c2);
    REQUIRE(bad.verdict == Tri::no);
    REQUIRE(!bad.detail.empty());

    // the degenerate triangle has even multiplicities but shared double loci
    const ContactCheck tri = even_contact_check(cubic_curve(reference_cubic_case_ii_q1(Rat(0))), q);
    REQUIRE(tri.verdict == Tri::indeterminate);

    // symmetry
    const ProjCurve fam(cubic_curve(reference_cubic_case_ii_q1(Rat(-3))));
    REQUIRE(even_contact(fam, q) == even_contact(q, fam));
    REQUIRE(even_contact(c1, c2) == even_contact(c2, c1));
}

TEST_CASE("smoothness across the degeneration") {
    REQUIRE(smoothness_check(ProjCurve(bp({UPoly(), UPoly(1)}), 1)));       // a line
    REQUIRE(smoothness_check(ProjCurve(bp({-(T * T), UPoly(1)}), 2)));      // a conic
    REQUIRE(!smoothness_check(ProjCurve(quartic_ii(), 4)));                 // four nodes
    REQUIRE(!smoothness_check(ProjCurve(bp({-(T * T), UPoly(), UPoly(), UPoly(1)}), 3)));  // cusp

    for (const Rat& s : {Rat(1), Rat(-3), Rat(7, 2)}) {
        REQUIRE(smoothness_check(cubic_curve(reference_cubic_case_ii_q1(s))));
        REQUIRE(smoothness_check(cubic_curve(reference_cubic_case_ii_q2(s))));
    }
    REQUIRE(!smoothness_check(cubic_curve(reference_cubic_case_ii_q1(Rat(0)))));
    REQUIRE(!smoothness_check(cubic_curve(reference_cubic_case_ii_q2(Rat(0)))));
}

TEST_CASE("scenario runner: both worked examples") {
    const StructuredReport r1 = verify_scenario("case_i", {Rat(0), Rat(1), Rat(5)});
    REQUIRE(r1.scenario == "case_i");
    REQUIRE(r1.all_passed());

    const StructuredReport r2 = verify_scenario("case_ii", {Rat(1), Rat(-3), Rat(7, 2)});
    REQUIRE(r2.scenario == "case_ii");
    REQUIRE(r2.all_passed());

    REQUIRE_THROWS_AS(verify_scenario("case_iii", {}), Error);
}

TEST_CASE("scenario runner: the degeneration is visible at s = 0") {
    const StructuredReport rep = verify_scenario("case_ii", {Rat(0)});
    REQUIRE(!rep.all_passed());
    auto item = [&](const std::string& name) -> const ReportItem& {
        for (const auto& it : rep.items)
            if (it.name == name) return it;
        FAIL("missing item " + name);
        static ReportItem dummy;
        return dummy;
    };
    REQUIRE(item("triangle_factorization").passed);
    REQUIRE(item("trisection_q1[s=0]").passed);
    REQUIRE(item("trisection_q2[s=0]").passed);
    REQUIRE(!item("smoothness[s=0]").passed);
    REQUIRE(!item("smoothness[s=0]").detail.empty());
    REQUIRE(item("bitangent_points[s=0]").passed);
    REQUIRE(item("group_law_q1").passed);
    REQUIRE(item("group_law_q2").passed);
    REQUIRE(item("splitting_types").passed);
}

TEST_CASE("degenerate member factors into the triangle") {
    const XPoly tri = reference_cubic_case_ii_q1(Rat(0));
    REQUIRE(reference_cubic_case_ii_q2(Rat(0)) == tri);
    XPoly prod(RFunc(1));
    for (const BiPoly& line : triangle_lines_case_ii()) prod *= xpoly_from_bipoly(line);
    REQUIRE(prod == tri);
    // and each chord divides it exactly
    for (const BiPoly& line : triangle_lines_case_ii()) {
        auto [quot, rem] = xpoly_divrem(tri, xpoly_from_bipoly(line));
        REQUIRE(rem.is_zero());
        REQUIRE(quot.degree() == 2);
    }
}
