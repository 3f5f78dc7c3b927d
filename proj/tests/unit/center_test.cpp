#include <doctest.h>

#include "helpers.hpp"
#include "wres/center/center.hpp"
#include "wres/error.hpp"

using namespace wres;
using testing::poly;
using testing::polys;
using testing::ring;

namespace {

Ideal I(const Ring& r, const std::string& gens) { return Ideal(r, polys(r, gens)); }

Invariant inv(std::initializer_list<const char*> xs) {
    Invariant out;
    for (const char* x : xs) out.emplace_back(x);
    for (auto& a : out) a.canonicalize();
    return out;
}

CenterData centerOf(const SmoothVariety& y, const Ideal& i) { return prepareCenter({{y, i}}); }

} // namespace

TEST_CASE("invariant order and b-to-a") {
    CHECK(compareInvariant(inv({"1", "2", "1"}), inv({"1", "2"})) == std::strong_ordering::less);
    CHECK(compareInvariant(inv({"2", "2", "1"}), inv({})) == std::strong_ordering::less);
    CHECK(compareInvariant(inv({"1", "1"}), inv({"1", "1"})) == std::strong_ordering::equal);
    CHECK(compareInvariant(inv({"5", "15/2"}), inv({"5", "7"})) == std::strong_ordering::greater);

    CHECK(bToA({3, 8, 50400}) == inv({"3", "4", "5"}));
    CHECK(bToA({}).empty());
    CHECK(bToA({5, 180}) == inv({"5", "15/2"}));
    CHECK(invariantToString(bToA({5, 180})) == "(5, 15/2)");
    CHECK(invariantToString({}) == "()");

    CHECK(reducedCenterWeights(inv({"5", "15/2"})) == std::vector<unsigned long>{3, 2});
    CHECK(reducedCenterWeights(inv({"2", "3", "3"})) == std::vector<unsigned long>{3, 2, 2});
    CHECK(reducedCenterWeights(inv({"1", "1"})) == std::vector<unsigned long>{1, 1});
    CHECK(reducedCenterWeights(inv({"2", "3", "5"})) == std::vector<unsigned long>{15, 10, 6});
}

TEST_CASE("coefficient ideals") {
    auto P = ring("x,y");
    auto a2 = SmoothVariety::affineSpace(P);
    DerivativeTower t(a2, I(P, "x^5+x^3*y^3+y^8"));
    CHECK(idealEqual(coefficientIdeal(t, 5, I(P, "x")), I(P, "x; y^180")));
    CHECK(idealEqual(coefficientIdeal(a2, I(P, "x^3-y^2"), 1), I(P, "x^3-y^2")));

    auto L = ring("x");
    CHECK(idealEqual(coefficientIdeal(SmoothVariety::affineSpace(L), I(L, "x^2"), 2), I(L, "x^2")));

    // Hand expansion: (x^2 - z y^2) + (x, y z, y^2)^2 restricted to x = 0.
    auto R = ring("x,y,z");
    DerivativeTower w(SmoothVariety::affineSpace(R), I(R, "x^2-z*y^2"));
    CHECK(idealEqual(coefficientIdeal(w, 2, I(R, "x")), I(R, "x; y^2*z; y^3*z; y^4")));

    CHECK_THROWS_AS(coefficientIdeal(a2, I(P, "x^4-x*y^3+y^4+x*y"), 4, 10), Error);
}

TEST_CASE("prepare center") {
    auto P = ring("x,y");
    auto a2 = SmoothVariety::affineSpace(P);
    auto c = centerOf(a2, I(P, "x^5+x^3*y^3+y^8"));
    CHECK(c.maxinv == inv({"5", "15/2"}));
    CHECK(c.bInvariant == std::vector<unsigned long>{5, 180});
    REQUIRE(c.winners.size() == 1);
    CHECK(c.winners[0].params == polys(P, "x; y"));
    CHECK(c.losers.empty());

    auto R = ring("x,y,z");
    auto a3 = SmoothVariety::affineSpace(R);
    auto whitney = centerOf(a3, I(R, "x^2-z*y^2"));
    CHECK(whitney.maxinv == inv({"2", "3", "3"}));
    CHECK(reducedCenterWeights(whitney.maxinv) == std::vector<unsigned long>{3, 2, 2});

    auto L = ring("x");
    auto point = centerOf(SmoothVariety::affineSpace(L), I(L, "x"));
    CHECK(point.maxinv == inv({"1"}));
    REQUIRE(point.winners.size() == 1);
    CHECK(point.winners[0].params == polys(L, "x"));

    CHECK(centerOf(a3, I(R, "x-y^2; z")).maxinv == inv({"1", "1"}));
    CHECK(centerOf(a3, I(R, "x^2+y^3+z^5")).maxinv == inv({"2", "3", "5"}));
    CHECK(centerOf(a3, I(R, "x*y*z")).maxinv == inv({"3", "3", "3"}));
    CHECK(centerOf(a2, Ideal(P)).maxinv == inv({}));
    CHECK_THROWS_AS(centerOf(a2, I(P, "1")), Error);
}

TEST_CASE("winners and losers") {
    // A cusp at the origin and a node at (1, 0): the cusp wins.
    auto P = ring("x,y");
    auto a2 = SmoothVariety::affineSpace(P);
    auto f = I(P, "(y^2-x^3)*((x-1)^2+y^2-(x-1)^3)");
    auto c = centerOf(a2, f);
    CHECK(c.maxinv == inv({"2", "3"}));
    for (const auto& w : c.winners) {
        CHECK(w.params.size() == 2);
        CHECK(isRegularParameters(w.piece.variety, w.params));
        // The origin lies on the winner's center.
        CHECK_FALSE(w.piece.variety.ideal().plus(w.params).isUnit());
    }
    for (const auto& l : c.losers) {
        auto sub = prepareCenter({{l.variety, l.ideal}});
        CHECK(compareInvariant(sub.maxinv, c.maxinv) == std::strong_ordering::less);
    }

    // Two charts: the maximum is taken over both.
    auto two = prepareCenter({{a2, I(P, "x^2-y^3")}, {a2, I(P, "x^2-y^5")}});
    CHECK(two.maxinv == inv({"2", "5"}));
    REQUIRE(two.winners.size() == 1);
    CHECK(two.winners[0].piece.origin == 1);
    REQUIRE(two.losers.size() == 1);
    CHECK(two.losers[0].origin == 0);
}
