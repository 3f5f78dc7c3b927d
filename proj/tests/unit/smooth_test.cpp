#include <doctest.h>

#include "helpers.hpp"
#include "wres/error.hpp"
#include "wres/smooth/smooth.hpp"

using namespace wres;
using testing::poly;
using testing::polys;
using testing::ring;

namespace {

Ideal I(const Ring& r, const std::string& gens) { return Ideal(r, polys(r, gens)); }

void checkChartIdentities(const SmoothVariety& y) {
    for (const auto& m : y.minorCover()) {
        if (m.rows.empty()) continue;
        auto jac = jacobian(y.ideal().generators());
        const std::size_t c = m.rows.size();
        // C^T M = h Id
        for (std::size_t a = 0; a < c; ++a)
            for (std::size_t b = 0; b < c; ++b) {
                Polynomial s(y.ring());
                for (std::size_t k = 0; k < c; ++k) s += m.cofactors[k][a] * jac[m.rows[k]][m.cols[b]];
                CHECK(s == (a == b ? m.h : Polynomial(y.ring())));
            }
        Ideal local = saturate(y.ideal(), m.h);
        for (std::size_t k = 0; k < m.derivations.size(); ++k)
            for (const auto& f : y.ideal().generators()) CHECK(local.contains(m.apply(k, f)));
    }
}

} // namespace

TEST_CASE("jacobian minor covers") {
    auto R = ring("x,y,z");
    auto a3 = SmoothVariety::affineSpace(R);
    REQUIRE(a3.minorCover().size() == 1);
    CHECK(a3.minorCover()[0].h.isOne());
    CHECK(a3.minorCover()[0].derivations.size() == 3);

    auto P = ring("x,y");
    auto circle = SmoothVariety::make(I(P, "x^2+y^2-1"));
    CHECK(circle.dim() == 1);
    const auto& cover = circle.minorCover();
    REQUIRE(cover.size() == 2);
    CHECK(cover[0].h == poly(P, "2*x"));
    CHECK(cover[1].h == poly(P, "2*y"));
    CHECK(I(P, "x^2+y^2-1; x; y").isUnit());
    checkChartIdentities(circle);

    auto twisted = SmoothVariety::make(I(R, "y-x^2; z-x^3"));
    CHECK(twisted.dim() == 1);
    checkChartIdentities(twisted);

    auto Q = ring("x");
    try {
        SmoothVariety::make(I(Q, "x^2"));
        FAIL("expected NOT-SMOOTH");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotSmooth);
    }
    CHECK_THROWS_AS(SmoothVariety::make(I(P, "x*(x-1); x*y")), Error);
}

TEST_CASE("component vanishing") {
    auto R = ring("x,y,z");
    auto y = SmoothVariety::make(I(R, "x*(x-1)"));
    // (x(x-1) : x^inf) = (x-1), which differs from (x(x-1)).
    CHECK(vanishesOnComponent(y, I(R, "x")));
    CHECK_FALSE(vanishesOnComponent(y, I(R, "z")));
    auto P = ring("x,y");
    CHECK(vanishesOnComponent(SmoothVariety::affineSpace(P), Ideal(P)));
}

TEST_CASE("smooth hypersurfaces") {
    auto P = ring("x,y");
    auto a2 = SmoothVariety::affineSpace(P);
    CHECK_FALSE(isSmoothHypersurface(a2, poly(P, "y^3-x^2")));
    CHECK(isSmoothHypersurface(a2, poly(P, "y-x^2")));

    auto R = ring("x,y,z");
    auto two = SmoothVariety::make(I(R, "x*(x-1)"));
    CHECK(isSmoothHypersurface(two, poly(R, "z")));
    CHECK_FALSE(isSmoothHypersurface(two, poly(R, "x*z")));

    auto circle = SmoothVariety::make(I(P, "x^2+y^2-1"));
    CHECK(isSmoothHypersurface(circle, poly(P, "x")));
    // x - 1 is tangent at (1, 0): a double point on the circle
    CHECK_FALSE(isSmoothHypersurface(circle, poly(P, "x-1")));
}

TEST_CASE("regular parameters") {
    auto R = ring("x,y,z");
    auto a3 = SmoothVariety::affineSpace(R);
    CHECK(isRegularParameters(a3, polys(R, "x; y")));
    CHECK(isRegularParameters(a3, polys(R, "x-y*z; y")));
    auto P = ring("x,y");
    auto a2 = SmoothVariety::affineSpace(P);
    CHECK_FALSE(isRegularParameters(a2, polys(P, "x; x")));
    CHECK_FALSE(isRegularParameters(a2, polys(P, "y^3-x^2")));
    CHECK_FALSE(isRegularParameters(a2, polys(P, "x; x*y-1")));
    CHECK(isRegularParameters(a2, polys(P, "1+x^2")));
}

TEST_CASE("orthogonal idempotents") {
    auto R = ring("x,y,z");
    auto y = SmoothVariety::make(I(R, "x*(x+1)*(x+2)"));
    auto e = orthogonalIdempotents(y, {I(R, "x"), I(R, "x+1"), I(R, "x+2")});
    REQUIRE(e.size() == 3);
    // CRT oracle: e_i(p_j) = delta_ij at the points 0, -1, -2.
    std::vector<Rational> pts{0, -1, -2};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            std::vector<Polynomial> at{Polynomial::constant(R, pts[j]), poly(R, "y"), poly(R, "z")};
            CHECK(e[i].substitute(at, R) == Polynomial::constant(R, i == j ? 1 : 0));
        }
    CHECK(e[0] == poly(R, "1/2*(x+1)*(x+2)"));
    CHECK(e[1] == poly(R, "-x*(x+2)"));
    CHECK(e[2] == poly(R, "1/2*x*(x+1)"));

    CHECK(orthogonalIdempotents(y, {I(R, "x*(x+1)*(x+2)")}) == std::vector<Polynomial>{poly(R, "1")});
    try {
        orthogonalIdempotents(y, {I(R, "x"), I(R, "x")});
        FAIL("expected NOT-COPRIME");
    } catch (const Error& err) {
        CHECK(err.kind() == ErrorKind::NotCoprime);
    }
}
