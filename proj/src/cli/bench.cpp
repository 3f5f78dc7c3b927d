#include "wres/cli/bench.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>

#include "wres/budget.hpp"
#include "wres/cli/parse.hpp"
#include "wres/error.hpp"

namespace wres {

const std::vector<BenchRow>& standardRows() {
    static const std::vector<BenchRow> rows = {
        {"x,y1,y2,y3", "x^2-y1*y2*y3", Statistics{5, 10}, false},
        {"x,y,z,t", "x^2+y^2+z^3*t^3", Statistics{5, 8}, false},
        {"x,y", "x^5+x^3*y^3+y^7", Statistics{1, 2}, false},
        {"x,y", "x^5+x^3*y^3+y^9", Statistics{3, 3}, false},
        {"x,y,z", "x^2+y^2*z^3-z^4", Statistics{4, 5}, false},
        {"x,y,z", "x^2+y^2*z-z^2", Statistics{1, 3}, true},
        {"x,y,z", "x^3*y+x*z^3+y^3*z+z^3+7*z^2+5*z", Statistics{1, 3}, false},
        {"x,y,z", "x^2+y^3+z^5", Statistics{1, 3}, true},
        {"x,y,z", "x^2-x^3+y^2+y^4+z^3-z^4", Statistics{1, 3}, true},
        {"x,y,z", "x^3-y*(1-z^2)^2", Statistics{4, 4}, false},
        {"x,y,z", "x^4+z^3-y*z^2", Statistics{4, 4}, false},
        {"x,y,z", "x^2+z^2+y^3*(y-1)^3", Statistics{1, 3}, false},
        {"x,y,z", "x*y*z+y*z+2*z^5", Statistics{9, 7}, false},
        {"x,y,z", "x^2+y^4+y^3*z^2", Statistics{4, 5}, false},
        {"x,y,z", "x^2+y^2*z^3", Statistics{8, 5}, false},
        {"x,y,z", "x*y*z", Statistics{4, 6}, false},
        {"x,y,z", "x^2+y^2*z+z^3", Statistics{1, 3}, false},
        {"x,y,z", "z^50-x*y", Statistics{1, 3}, true},
    };
    return rows;
}

BenchResult runBenchRow(const BenchRow& row, double budgetSeconds, const ResolutionOptions& options) {
    BenchResult r{row, std::nullopt, 0, "ok"};
    auto start = std::chrono::steady_clock::now();
    try {
        DeadlineScope scope(std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(budgetSeconds)));
        Ring ring = PolyRing::make(parseVariableList(row.ring));
        auto problem = makeProblem({{SmoothVariety::affineSpace(ring), Ideal(ring, {parsePolynomial(row.ideal, ring)})}});
        r.stats = countStatistics(weightedResolution(problem, options));
    } catch (const Error& e) {
        r.status = e.kind() == ErrorKind::Timeout ? "TIMEOUT" : errorTag(e.kind());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string benchVerdict(const BenchResult& r) {
    if (!r.row.reference) return "-";
    if (!r.stats) return "no result";
    if (r.stats->blowUps != r.row.reference->blowUps) return "DIFFERS";
    if (r.stats->finalCharts == r.row.reference->finalCharts) return "match";
    return r.row.chartsPinned ? "DIFFERS" : "calls match";
}

std::string benchReport(const std::vector<BenchResult>& results, bool withTimes) {
    auto pair = [](const std::optional<Statistics>& s) {
        return s ? "(" + std::to_string(s->blowUps) + "," + std::to_string(s->finalCharts) + ")" : std::string("-");
    };
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof line, "%-34s %-10s %-10s %-12s", "input", "result", "reference", "verdict");
    os << line << (withTimes ? "   seconds" : "") << "\n";
    for (const auto& r : results) {
        std::string got = r.stats ? pair(r.stats) : r.status;
        std::snprintf(line, sizeof line, "%-34s %-10s %-10s %-12s", r.row.ideal.c_str(), got.c_str(),
                      pair(r.row.reference).c_str(), benchVerdict(r).c_str());
        os << line;
        if (withTimes) {
            std::snprintf(line, sizeof line, " %9.2f", r.seconds);
            os << line;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace wres
