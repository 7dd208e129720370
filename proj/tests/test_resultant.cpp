#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mwtrisect/resultant.hpp"
#include "oracle_determinant.hpp"

using namespace mwtrisect;

namespace {

BiPoly bp(std::vector<UPoly> asc) { return BiPoly(std::move(asc)); }

BiPoly random_bipoly(std::mt19937_64& rng, int max_xdeg, int max_tdeg) {
    std::uniform_int_distribution<int> xdeg(0, max_xdeg);
    std::uniform_int_distribution<int> tdeg(-1, max_tdeg);
    std::uniform_int_distribution<long long> coeff(-3, 3);
    const int dx = xdeg(rng);
    std::vector<UPoly> cols;
    for (int j = 0; j <= dx; ++j) {
        const int dt = tdeg(rng);
        std::vector<QuadScalar> c;
        for (int i = 0; i <= dt; ++i) c.emplace_back(coeff(rng));
        cols.push_back(UPoly(std::move(c)));
    }
    return bp(std::move(cols));
}

}  // namespace

TEST_CASE("resultant of two linear factors is the root difference") {
    const UPoly t = UPoly::var();
    auto check = [&](const UPoly& a, const UPoly& b) {
        const BiPoly f = bp({-a, UPoly(1)});
        const BiPoly g = bp({-b, UPoly(1)});
        REQUIRE(resultant_x(f, g) == a - b);
        REQUIRE(testoracle::sylvester_resultant(f, g) == a - b);
    };
    check(UPoly(3), UPoly(5));
    check(t * t, t * QuadScalar(-3) - UPoly(2));
    check(t * QuadScalar(5) - UPoly(6), t * QuadScalar(9) - UPoly(18));
}

TEST_CASE("PRS agrees with the Sylvester determinant, randomized") {
    std::mt19937_64 rng(424242);
    int done = 0;
    while (done < 60) {
        const BiPoly f = random_bipoly(rng, 4, 2);
        const BiPoly g = random_bipoly(rng, 4, 2);
        if (f.degree() < 1 && g.degree() < 1) continue;
        if (f.is_zero() || g.is_zero()) continue;
        REQUIRE(resultant_x(f, g) == testoracle::sylvester_resultant(f, g));
        ++done;
    }
}

TEST_CASE("swapping arguments flips the sign only for odd-odd degrees") {
    std::mt19937_64 rng(99);
    int done = 0;
    while (done < 40) {
        const BiPoly f = random_bipoly(rng, 3, 2);
        const BiPoly g = random_bipoly(rng, 3, 2);
        if (f.degree() < 1 || g.degree() < 1) continue;
        const UPoly rfg = resultant_x(f, g);
        const UPoly rgf = resultant_x(g, f);
        if ((f.degree() % 2 == 1) && (g.degree() % 2 == 1))
            REQUIRE(rfg == -rgf);
        else
            REQUIRE(rfg == rgf);
        ++done;
    }
}

TEST_CASE("a common factor forces a zero resultant, and conversely") {
    const UPoly t = UPoly::var();
    const BiPoly common = bp({t + UPoly(1), UPoly(2)});
    const BiPoly f = common * bp({t, UPoly(1)});
    const BiPoly g = common * bp({UPoly(3), t, UPoly(1)});
    REQUIRE(resultant_x(f, g).is_zero());
    REQUIRE(testoracle::sylvester_resultant(f, g).is_zero());

    // coprime in x -> nonzero
    const BiPoly a = bp({t, UPoly(1)});
    const BiPoly b = bp({t + UPoly(1), UPoly(1)});
    REQUIRE(!resultant_x(a, b).is_zero());
}

TEST_CASE("degenerate inputs") {
    const BiPoly c5 = bp({UPoly(5)});
    const BiPoly lin = bp({UPoly::var(), UPoly(1)});
    REQUIRE_THROWS_AS(resultant_x(c5, c5), Error);
    REQUIRE(resultant_x(BiPoly(), lin).is_zero());
    REQUIRE(resultant_x(lin, BiPoly()).is_zero());
    // constant against positive degree: Res(c, g) = c^deg g
    REQUIRE(resultant_x(c5, lin) == UPoly(5));
    const BiPoly quad = bp({UPoly(1), UPoly(0), UPoly(1)});
    REQUIRE(resultant_x(c5, quad) == UPoly(25));
    REQUIRE(resultant_x(quad, c5) == UPoly(25));
}

TEST_CASE("multiplicative in the first argument") {
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 25) {
        const BiPoly f1 = random_bipoly(rng, 2, 1);
        const BiPoly f2 = random_bipoly(rng, 2, 1);
        const BiPoly g = random_bipoly(rng, 2, 1);
        if (f1.is_zero() || f2.is_zero() || g.degree() < 1) continue;
        REQUIRE(resultant_x(f1 * f2, g) == resultant_x(f1, g) * resultant_x(f2, g));
        ++done;
    }
}

TEST_CASE("evaluation picture: roots of the resultant are shared-x parameters") {
    // f = x - t^2 and g = x^2 + (25 - 10t)x - 36 meet exactly over t in {-1, 2, 3, 6}
    const UPoly t = UPoly::var();
    const BiPoly f = bp({-(t * t), UPoly(1)});
    const BiPoly g = bp({UPoly(-36), t * QuadScalar(-10) + UPoly(25), UPoly(1)});
    const UPoly r = resultant_x(f, g);
    REQUIRE(r.degree() == 4);
    for (long long t0 : {-1, 2, 3, 6}) REQUIRE(r.eval(QuadScalar(t0)).is_zero());
    REQUIRE(!r.eval(QuadScalar(0)).is_zero());
    REQUIRE(r == testoracle::sylvester_resultant(f, g));
}
