#include <doctest.h>

#include "helpers.hpp"
#include "wres/error.hpp"
#include "wres/ideal/ideal.hpp"

using namespace wres;
using testing::poly;
using testing::polys;
using testing::ring;

namespace {

Ideal I(const Ring& r, const std::string& gens) { return Ideal(r, polys(r, gens)); }

// Saturation oracle: iterate quotients until the ideal stops growing.
Ideal saturateByIteration(Ideal i, const Polynomial& g) {
    for (;;) {
        Ideal next = quotient(i, g);
        if (idealEqual(next, i)) return i;
        i = next;
    }
}

} // namespace

TEST_CASE("ideal comparison") {
    auto R = ring("x,y,z");
    CHECK(idealCompare(I(R, "x^2; 2*x"), I(R, "x")) == Containment::Equal);
    CHECK(idealCompare(I(R, "x*y^2; x^2*y; z"), I(R, "z^2-x^2*y^2")) == Containment::SecondInFirst);
    CHECK(idealCompare(I(R, "x"), I(R, "y")) == Containment::Incomparable);
}

TEST_CASE("ideal power") {
    auto R = ring("x,y");
    CHECK(idealEqual(idealPower(I(R, "x; y"), 2), I(R, "x^2; x*y; y^2")));
    auto p = idealPower(I(R, "y"), 180);
    CHECK(idealEqual(p, I(R, "y^180")));
    CHECK(p.generators().size() == 1);
    CHECK(idealPower(I(R, "x+y"), 0).isUnit());
    CHECK(idealEqual(idealPower(I(R, "x; y^2"), 3), I(R, "x^3; x^2*y^2; x*y^4; y^6")));
}

TEST_CASE("intersection") {
    auto R = ring("x,y");
    CHECK(idealEqual(intersect(I(R, "x"), I(R, "y")), I(R, "x*y")));
    // Candidates x^2 and xy lie in both; conversely a*x^2+b*y... in (x) forces the y-part into (xy).
    Ideal meet = intersect(I(R, "x^2; y"), I(R, "x"));
    CHECK(idealEqual(meet, I(R, "x^2; x*y")));
    CHECK(I(R, "x^2; y").contains(meet));
    CHECK(I(R, "x").contains(meet));
    auto a = I(R, "x^2-y; x*y");
    CHECK(idealEqual(intersect(a, Ideal::unit(R)), a));
}

TEST_CASE("quotient and saturation") {
    auto R = ring("x,y");
    CHECK(idealEqual(quotient(I(R, "x^2*y"), poly(R, "y")), I(R, "x^2")));
    CHECK(idealEqual(quotient(I(R, "x^2"), poly(R, "y")), I(R, "x^2")));
    CHECK(idealEqual(saturate(I(R, "x^2*y"), poly(R, "y")), I(R, "x^2")));
    CHECK(saturate(I(R, "x"), poly(R, "x")).isUnit());

    auto C = ring("y2,y3,u");
    auto sat = saturate(I(C, "u^6*(1-y2*y3^2)"), poly(C, "u"));
    CHECK(idealEqual(sat, I(C, "1-y2*y3^2")));

    auto T = ring("x,y,z");
    auto a = I(T, "x^3*y-x*z^2; y^2*z^3-x*y");
    for (const auto* g : {"x", "y", "x*z"}) {
        auto h = poly(T, g);
        CHECK(idealEqual(saturate(a, h), saturateByIteration(a, h)));
    }
    CHECK(idealEqual(saturate(a, I(T, "x; y")), intersect(saturate(a, poly(T, "x")), saturate(a, poly(T, "y")))));
    // A generator already in the ideal saturates to (1) and must not end the intersection.
    CHECK(idealEqual(saturate(I(T, "x^2-x"), I(T, "x^2-x; z^2")), I(T, "x^2-x")));
    CHECK(idealEqual(saturate(I(T, "x^2-x"), I(T, "x; z")), I(T, "x^2-x")));
    CHECK(idealEqual(saturate(I(T, "x^2-x"), I(T, "x; x*z")), I(T, "x-1")));
}

TEST_CASE("elimination") {
    auto R = ring("x,y,z");
    auto e = eliminate(I(R, "x-y^2; y-z"), {1});
    CHECK(e.ideal.ring()->variables() == std::vector<std::string>{"x", "z"});
    CHECK(idealEqual(e.ideal, I(e.ideal.ring(), "x-z^2")));
    CHECK(e.kept == std::vector<std::size_t>{0, 2});

    auto z = eliminate(I(R, "x"), {0});
    CHECK(z.ideal.isZero());

    auto T = ring("t,x,y");
    auto m = eliminate(I(T, "t*x; (1-t)*y"), {0});
    CHECK(idealEqual(m.ideal, I(m.ideal.ring(), "x*y")));
}

TEST_CASE("ring map image and preimage") {
    auto S = ring("x,y,y1,y2,u");
    auto T = ring("x,y,T,u");
    RingMap phi{S, T, I(T, "T*u-1"), polys(T, "x; y; x*T^3; y*T^2; u")};
    auto pre = mapPreimage(phi, Ideal(T));
    CHECK(idealEqual(pre, I(S, "x-y1*u^3; y-y2*u^2; y^3*y1^2-x^2*y2^3; y*y1*u-x*y2; x*y2^2*u-y^2*y1")));

    auto id = RingMap::identity(S);
    auto a = I(S, "x*y-u; y1^2");
    CHECK(idealEqual(mapPreimage(id, a), a));
    CHECK(idealEqual(mapImage(id, a), a));

    auto A = ring("x,y");
    auto C = ring("y2,u");
    RingMap chart{A, C, Ideal(C), polys(C, "u^3; y2*u^2")};
    auto img = mapImage(chart, I(A, "x^5+x^3*y^3+y^8"));
    CHECK(idealEqual(img, I(C, "u^15*(1+y2^3+u*y2^8)")));
}

TEST_CASE("gluing") {
    auto R = ring("x");
    CHECK(idealEqual(glueIdeals({{I(R, "x"), poly(R, "1")}}), I(R, "x")));
    // (x(x-1) : x^inf) = (x-1), ((x-1) : (x-1)^inf) = (1).
    auto g = glueIdeals({{I(R, "x*(x-1)"), poly(R, "x")}, {I(R, "x-1"), poly(R, "x-1")}});
    CHECK(idealEqual(g, I(R, "x-1")));
    try {
        glueIdeals({{I(R, "x"), poly(R, "x")}, {I(R, "x^2"), poly(R, "x")}});
        FAIL("expected partition failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PartitionFailure);
    }
}
