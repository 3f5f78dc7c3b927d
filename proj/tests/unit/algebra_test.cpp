#include <doctest.h>

#include "helpers.hpp"
#include "wres/error.hpp"

using namespace wres;
using testing::poly;
using testing::polys;
using testing::ring;
using testing::strings;

namespace {

Polynomial combine(const std::vector<Polynomial>& c, const std::vector<Polynomial>& g) {
    Polynomial s(g.front().ring());
    for (std::size_t i = 0; i < g.size(); ++i) s += c[i] * g[i];
    return s;
}

} // namespace

TEST_CASE("polynomial arithmetic and printing") {
    auto R = ring("x,y,z");
    auto f = poly(R, "x^2-z*y^2");
    CHECK(f.toString() == "-y^2*z+x^2");
    CHECK(poly(R, "(x+y)^2") == poly(R, "x^2+2*x*y+y^2"));
    CHECK(poly(R, "(x+y)*(x-y)") == poly(R, "x^2-y^2"));
    CHECK(poly(R, "3/2*x*y").toString() == "3/2*x*y");
    CHECK(poly(R, "0").isZero());
    CHECK(poly(R, "x^3*y").derivative(0) == poly(R, "3*x^2*y"));
    CHECK(poly(R, "6/4*x+3").primitive() == poly(R, "x+2"));
    CHECK(poly(R, "-2*x+4").primitive() == poly(R, "x-2"));
    auto g = poly(R, "x*y+z");
    std::vector<Polynomial> im{poly(R, "y"), poly(R, "x"), poly(R, "z^2")};
    CHECK(g.substitute(im, R) == poly(R, "x*y+z^2"));
}

TEST_CASE("parse errors") {
    auto R = ring("x,y");
    CHECK_THROWS_AS(parsePolynomial("x+", R), Error);
    CHECK_THROWS_AS(parsePolynomial("2x", R), Error);
    try {
        parsePolynomial("x+w", R);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownVariable);
    }
}

TEST_CASE("groebner basis examples") {
    auto R = ring("x,y,z");
    // S(x^2, xy-x) = y*x^2 - x*(xy-x) = x^2, which reduces to 0.
    auto gb = groebnerBasis(R, polys(R, "x^2; x*y-x"), MonomialOrder::degrevlex());
    CHECK(strings(gb.generators) == std::vector<std::string>{"x^2", "x*y-x"});

    auto unit = groebnerBasis(R, polys(R, "1; x"), MonomialOrder::degrevlex());
    CHECK(unit.isUnit());
    CHECK(strings(unit.generators) == std::vector<std::string>{"1"});

    // x - y, y - z: substitute y = z into the first.
    auto lex = groebnerBasis(R, polys(R, "x-y; y-z"), MonomialOrder::lex());
    CHECK(strings(lex.generators) == std::vector<std::string>{"x-z", "y-z"});

    auto zero = groebnerBasis(R, polys(R, "0"), MonomialOrder::degrevlex());
    CHECK(zero.isZero());
}

TEST_CASE("groebner basis is idempotent and cofactors are exact") {
    auto R = ring("x,y,z");
    auto gens = polys(R, "x^2*y-z; x*y^2-x; y*z-1/3*x");
    auto gb = groebnerBasis(R, gens, MonomialOrder::degrevlex(), true);
    auto again = groebnerBasis(R, gb.generators, MonomialOrder::degrevlex());
    CHECK(strings(gb.generators) == strings(again.generators));
    REQUIRE(gb.cofactors);
    for (std::size_t k = 0; k < gb.generators.size(); ++k) CHECK(combine((*gb.cofactors)[k], gens) == gb.generators[k]);
    for (const auto& g : gens) CHECK(normalForm(g, gb).isZero());
}

TEST_CASE("normal form") {
    auto R = ring("x");
    auto gb = groebnerBasis(R, polys(R, "x"), MonomialOrder::lex());
    CHECK(normalForm(poly(R, "x^2+1"), gb) == poly(R, "1"));
    CHECK(normalForm(poly(R, "0"), gb).isZero());

    auto S = ring("x,y,z");
    auto d = groebnerBasis(S, polys(S, "x*y^2; x^2*y; z"), MonomialOrder::degrevlex());
    CHECK(normalForm(poly(S, "z^2-x^2*y^2"), d).isZero());
    auto e = groebnerBasis(S, polys(S, "x^2+y; 2*y-z"), MonomialOrder::lex());
    CHECK(normalForm(poly(S, "x^2"), e) == poly(S, "-1/2*z"));
}

TEST_CASE("lift combination") {
    auto R = ring("x,y");
    auto g1 = polys(R, "x; 1-x");
    auto c1 = liftCombination(poly(R, "1"), g1);
    REQUIRE(c1);
    CHECK(combine(*c1, g1) == poly(R, "1"));

    auto g2 = polys(R, "x");
    auto c2 = liftCombination(poly(R, "x*y"), g2);
    REQUIRE(c2);
    CHECK((*c2)[0] == poly(R, "y"));

    CHECK_FALSE(liftCombination(poly(R, "1"), g2));

    auto g3 = polys(R, "x^2+y^2-1; x; y");
    auto c3 = liftCombination(poly(R, "1"), g3);
    REQUIRE(c3);
    CHECK(combine(*c3, g3) == poly(R, "1"));
}

TEST_CASE("krull dimension") {
    auto R = ring("x,y,z");
    CHECK(krullDimension(R, {}) == 3u);
    CHECK(krullDimension(R, polys(R, "x^2-z*y^2")) == 2u);
    CHECK_FALSE(krullDimension(R, polys(R, "1")).has_value());
    CHECK(krullDimension(R, polys(R, "x; y")) == 1u);
    CHECK(krullDimension(R, polys(R, "x*y; x*z")) == 2u);

    // Independent-set oracle: S is independent iff the elimination ideal in k[S] is zero.
    auto gens = polys(R, "x^2-z*y^2");
    std::size_t best = 0;
    for (unsigned mask = 0; mask < 8; ++mask) {
        std::vector<std::size_t> perm;
        std::vector<std::string> names;
        std::size_t k = 0;
        for (std::size_t i = 0; i < 3; ++i)
            if (!(mask >> i & 1)) {
                perm.push_back(i);
                ++k;
            }
        for (std::size_t i = 0; i < 3; ++i)
            if (mask >> i & 1) perm.push_back(i);
        std::vector<std::size_t> index(3);
        for (std::size_t p = 0; p < 3; ++p) {
            index[perm[p]] = p;
            names.push_back(R->variable(perm[p]));
        }
        auto T = PolyRing::make(names);
        std::vector<Polynomial> moved;
        for (const auto& g : gens) moved.push_back(g.relabel(index, T));
        auto gb = groebnerBasis(T, moved, MonomialOrder::eliminating(k));
        bool independent = true;
        for (const auto& g : gb.generators) {
            bool inS = true;
            for (std::size_t v = 0; v < k; ++v) inS = inS && !g.involves(v);
            if (inS) independent = false;
        }
        if (independent) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    CHECK(best == 2u);
}
