#include <doctest.h>

#include <functional>

#include "helpers.hpp"
#include "wres/cli/bench.hpp"
#include "wres/cli/emit.hpp"
#include "wres/error.hpp"

using namespace wres;
using testing::polys;
using testing::ring;

namespace {

ErrorKind kindOf(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::InvariantViolation;
}

} // namespace

TEST_CASE("problem files") {
    auto p = readProblemJson(R"({"ring": "x,y,z", "ambient": "z-x^2-y", "ideal": ["x^2-y^3"], "codim": 1})");
    REQUIRE(p.charts.size() == 1);
    CHECK(p.charts[0].ring == std::vector<std::string>{"x", "y", "z"});
    CHECK(p.charts[0].ambient == std::vector<std::string>{"z-x^2-y"});
    auto prob = buildProblem(p);
    CHECK(prob.codim == 1);
    CHECK(prob.charts[0].variety.dim() == 2);

    auto cover = readProblemJson(R"({"ring": ["x", "y"], "charts": [{"ideal": "y^2-x^3"}, {"ring": ["x", "z"], "ideal": ["z-x^3"]}]})");
    REQUIRE(cover.charts.size() == 2);
    CHECK(cover.charts[0].ring == std::vector<std::string>{"x", "y"});
    CHECK(cover.charts[1].ring == std::vector<std::string>{"x", "z"});

    auto again = readProblemJson(problemToJson(cover));
    CHECK(again.charts.size() == 2);
    CHECK(again.charts[1].ideal == cover.charts[1].ideal);

    auto flags = problemFromFlags("x,y", "", "x^2, y^3; x*y");
    CHECK(flags.charts[0].ideal.size() == 3);

    CHECK(kindOf([] { readProblemJson("{"); }) == ErrorKind::ParseError);
    CHECK(kindOf([] { readProblemJson(R"({"charts": []})"); }) == ErrorKind::ParseError);
    CHECK(kindOf([] { readProblemJson(R"({"ring": [1], "ideal": "x"})"); }) == ErrorKind::ParseError);
    CHECK(kindOf([] { buildCharts(readProblemJson(R"({"ring": "x,x", "ideal": "x"})")); }) == ErrorKind::ParseError);
    CHECK(kindOf([] { buildCharts(readProblemJson(R"({"ring": "x,y", "ideal": "z"})")); }) ==
          ErrorKind::UnknownVariable);
    CHECK(kindOf([] { buildCharts(readProblemJson(R"({"ring": "x,y", "ambient": "x^2-y^3", "ideal": "x"})")); }) ==
          ErrorKind::NotSmooth);
    CHECK(kindOf([] { buildProblem(readProblemJson(R"({"ring": "x,y", "ideal": "x", "codim": 2})")); }) ==
          ErrorKind::PreconditionViolation);
    CHECK(kindOf([] { readProblemFile("/nonexistent/problem.json"); }) == ErrorKind::ParseError);
}

TEST_CASE("tree emission") {
    auto R = ring("x,y,z");
    auto smooth = weightedResolution(makeProblem({{SmoothVariety::affineSpace(R), Ideal(R, polys(R, "x"))}}));
    CHECK(emitTree(smooth, EmitFormat::Summary).rfind("already smooth; 0 blowups\n", 0) == 0);

    auto tree = weightedResolution(makeProblem({{SmoothVariety::affineSpace(R), Ideal(R, polys(R, "x^2-z*y^2"))}}));
    auto text = emitTree(tree, EmitFormat::Summary);
    CHECK(text.rfind("step 1: maxinv (2, 3, 3) weights (3, 2, 2)", 0) == 0);
    CHECK(text.find("blowups: 2\n") != std::string::npos);
    CHECK(text == emitTree(tree, EmitFormat::Summary));

    auto dot = emitTree(tree, EmitFormat::Dot);
    CHECK(dot.find("c0 -> c3") != std::string::npos);

    // Reading the final charts back gives the same ideals.
    auto back = buildCharts(finalChartsFromJson(emitTree(tree, EmitFormat::Json)));
    const auto& fin = tree.finalCharts();
    REQUIRE(back.size() == fin.size());
    for (std::size_t k = 0; k < fin.size(); ++k) {
        const auto& r = back[k].variety.ring();
        CHECK(r->variables() == fin[k].variety.ring()->variables());
        auto same = [&](const Ideal& a) {
            std::vector<Polynomial> moved;
            for (const auto& g : a.generators()) moved.push_back(parsePolynomial(g.toString(), r));
            return Ideal(r, moved);
        };
        CHECK(idealEqual(back[k].ideal, same(fin[k].ideal)));
        CHECK(idealEqual(back[k].variety.ideal(), same(fin[k].variety.ideal())));
    }
    CHECK_THROWS_AS(finalChartsFromJson("[]"), Error);
}

TEST_CASE("bench rows") {
    const auto& rows = standardRows();
    CHECK(rows.size() == 18);
    auto r = runBenchRow(rows[7], 60);
    CHECK(r.status == "ok");
    REQUIRE(r.stats);
    CHECK(r.stats->blowUps == 1);
    CHECK(r.stats->finalCharts == 3);
    CHECK(benchVerdict(r) == "match");

    BenchResult off = r;
    off.stats->finalCharts = 4;
    CHECK(benchVerdict(off) == "DIFFERS");
    off.row.chartsPinned = false;
    CHECK(benchVerdict(off) == "calls match");

    auto slow = runBenchRow({"x,y,z", "x*y*z+y*z+2*z^5", std::nullopt, false}, 0.05);
    CHECK(slow.status == "TIMEOUT");
    CHECK(benchReport({slow}, false).find("TIMEOUT") != std::string::npos);
}
