#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wres/resolution/resolution.hpp"

namespace wres {

// One entry of a chart list: generators are kept as text until a ring exists.
struct ProblemChart {
    std::vector<std::string> ring;
    std::vector<std::string> ambient;
    std::vector<std::string> ideal;
};

struct ProblemFile {
    std::string name;
    std::vector<ProblemChart> charts;
    std::optional<std::size_t> codim;
};

// JSON layout documented in docs/problem_format.md. Throws Error(ParseError).
ProblemFile readProblemJson(const std::string& text);
ProblemFile readProblemFile(const std::string& path);
std::string problemToJson(const ProblemFile& p);
// One chart from flag values; ambient and ideal are lists separated by ';' or ','.
ProblemFile problemFromFlags(const std::string& ring, const std::string& ambient, const std::string& ideal);

// Parses every chart; ambient ideals are checked for smoothness.
std::vector<ChartInput> buildCharts(const ProblemFile& p);
ResolutionProblem buildProblem(const ProblemFile& p);

} // namespace wres
