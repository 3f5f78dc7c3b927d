#include <doctest.h>

#include "helpers.hpp"
#include "wres/derivatives/derivatives.hpp"

using namespace wres;
using testing::poly;
using testing::polys;
using testing::ring;

namespace {

Ideal I(const Ring& r, const std::string& gens) { return Ideal(r, polys(r, gens)); }

// Oracle on affine space: generators plus all first partials.
Ideal jacobianIdeal(const Ideal& i) {
    std::vector<Polynomial> g = i.generators();
    for (const auto& f : i.generators())
        for (std::size_t v = 0; v < f.ring()->size(); ++v) g.push_back(f.derivative(v));
    return Ideal(i.ring(), g);
}

} // namespace

TEST_CASE("first derivative on affine space") {
    auto R = ring("x,y,z");
    auto a3 = SmoothVariety::affineSpace(R);
    auto d = diff(a3, I(R, "z^2-x^2*y^2"));
    CHECK(idealEqual(d.ideal, I(R, "x*y^2; x^2*y; z")));
    auto f = I(R, "x^3-y*z; y^2+x");
    CHECK(idealEqual(diff(a3, f).ideal, jacobianIdeal(f)));
    CHECK(diff(a3, Ideal::unit(R)).ideal.isUnit());
}

TEST_CASE("iterated derivatives and max order") {
    auto R = ring("x,y,z");
    auto a3 = SmoothVariety::affineSpace(R);
    auto w = I(R, "z^2-x^2*y^2");
    CHECK(diffIterated(a3, w, 2).ideal.isUnit());
    CHECK(maximalOrderOfVanishing(a3, w) == 2u);
    CHECK(idealEqual(bSingularLocus(a3, w, 2), I(R, "x*y^2; x^2*y; z")));
    CHECK(idealEqual(bSingularLocus(a3, w, 1), w));

    auto P = ring("x,y");
    auto a2 = SmoothVariety::affineSpace(P);
    auto f = I(P, "x^5+x^3*y^3+y^8");
    CHECK(idealEqual(diffIterated(a2, f, 4).ideal, I(P, "x; y^2")));
    CHECK(maximalOrderOfVanishing(a2, f) == 5u);
    CHECK(idealEqual(bSingularLocus(a2, f, 5), I(P, "x; y^2")));
    CHECK(idealEqual(diffIterated(a2, I(P, "x"), 0).ideal, I(P, "x")));

    CHECK_FALSE(maximalOrderOfVanishing(a2, Ideal(P)).has_value());
    CHECK(maximalOrderOfVanishing(a2, I(P, "x+1")) == 1u);
    CHECK(maximalOrderOfVanishing(a2, I(P, "x^2+1; x")) == 0u);
}

TEST_CASE("derivatives on a curved variety") {
    // On the circle, (y) has order one at (+-1, 0): its derivative is (1).
    auto P = ring("x,y");
    auto circle = SmoothVariety::make(I(P, "x^2+y^2-1"), true);
    CHECK(maximalOrderOfVanishing(circle, I(P, "y")) == 1u);
    // x - 1 is tangent at (1, 0), vanishing there to order 2.
    CHECK(maximalOrderOfVanishing(circle, I(P, "x-1")) == 2u);
    CHECK(idealEqual(bSingularLocus(circle, I(P, "x-1"), 2), I(P, "x-1; y")));
    // The localization of A^2 at x: k[x,y,t]/(1 - t x).
    auto L = ring("x,y,t");
    auto punctured = SmoothVariety::make(I(L, "1-t*x"), true);
    CHECK(idealEqual(diff(punctured, I(L, "y^2-x")).ideal, Ideal::unit(L)));
    CHECK(maximalOrderOfVanishing(punctured, I(L, "y^3")) == 3u);
    CHECK(idealEqual(bSingularLocus(punctured, I(L, "y^3"), 3), I(L, "y; 1-t*x")));

    auto two = SmoothVariety::make(I(ring("x,y,z"), "x*(x-1)"));
    CHECK_FALSE(maximalOrderOfVanishing(two, I(two.ring(), "x*z")).has_value());
    CHECK(maximalOrderOfVanishing(two, I(two.ring(), "z^2")) == 2u);

    // The chart y != 0 sees a unit ideal; the other chart must still count.
    auto R = ring("x,y,z");
    auto parabola = SmoothVariety::make(I(R, "x; y^2-4*z"), true);
    CHECK(idealEqual(diff(parabola, I(R, "z^24")).ideal, I(R, "x; y^2-4*z; y*z^23")));
    CHECK(maximalOrderOfVanishing(parabola, I(R, "z^24")) == 48u);
}
