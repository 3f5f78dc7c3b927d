#include <doctest.h>

#include "random_poly.hpp"
#include "wres/budget.hpp"
#include "wres/error.hpp"
#include "wres/resolution/resolution.hpp"

using namespace wres;
using testing::RandomPolys;

TEST_CASE("random plane curve singularities resolve to smooth charts") {
    RandomPolys rp(41);
    auto R = testing::ring("x,y");
    auto a2 = SmoothVariety::affineSpace(R);
    const Ideal origin(R, {Polynomial::variable(R, 0), Polynomial::variable(R, 1)});
    int resolved = 0, attempts = 0, slow = 0;
    while (resolved < testing::kInstances && attempts < 2 * testing::kInstances) {
        // x^a + c y^b plus terms above the Newton diagonal.
        const unsigned a = static_cast<unsigned>(rp.integer(2, 5)), b = static_cast<unsigned>(rp.integer(2, 6));
        std::vector<Term> terms{{Monomial{a, 0}, 1}, {Monomial{0, b}, rp.coefficient(9, 1)}};
        for (int k = 0; k < 3; ++k) {
            Monomial m = rp.monomial(2, a + b);
            if (m[0] * b + m[1] * a > a * b) terms.push_back({m, rp.coefficient(9, 1)});
        }
        Polynomial f = Polynomial::fromTerms(R, terms);
        ResolutionTree tree;
        try {
            // Exact Groebner work is unbounded; a few curves are skipped on time.
            DeadlineScope scope(std::chrono::seconds(2));
            // Keep curves whose only singular point is the origin.
            Ideal sing(R, {f, f.derivative(0), f.derivative(1)});
            if (!saturate(sing, origin).isUnit()) continue;
            ++attempts;
            tree = weightedResolution(makeProblem({{a2, Ideal(R, {f})}}));
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::Timeout);
            ++slow;
            continue;
        }
        ++resolved;
        CHECK(!tree.steps.empty());
        for (std::size_t s = 1; s < tree.steps.size(); ++s)
            CHECK(compareInvariant(tree.steps[s].maxinv, tree.steps[s - 1].maxinv) < 0);
        CHECK(isResolved(tree.finalMaxinv, 1));
        for (const auto& c : tree.finalCharts()) CHECK(transformIsSmooth(c, 1));
    }
    MESSAGE(resolved << " resolved, " << slow << " skipped on the time limit");
    CHECK(resolved == testing::kInstances);
    CHECK(slow * 10 <= attempts);
}
