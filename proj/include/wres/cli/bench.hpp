#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wres/cli/problem.hpp"

namespace wres {

struct BenchRow {
    std::string ring;   // "x,y,z"
    std::string ideal;  // one generator
    std::optional<Statistics> reference;
    bool chartsPinned = false;  // reference chart count is expected to match exactly
};

// The standard table: hypersurfaces V(f) in affine space over f's variables.
const std::vector<BenchRow>& standardRows();

struct BenchResult {
    BenchRow row;
    std::optional<Statistics> stats;
    double seconds = 0;
    std::string status;  // "ok", "TIMEOUT" or an error tag
};

BenchResult runBenchRow(const BenchRow& row, double budgetSeconds, const ResolutionOptions& options = {});

// "match" when calls agree and, on pinned rows, chart counts too.
std::string benchVerdict(const BenchResult& r);
std::string benchReport(const std::vector<BenchResult>& results, bool withTimes = true);

} // namespace wres
