#pragma once

#include <string>
#include <vector>

#include "wres/cli/problem.hpp"

namespace wres {

enum class EmitFormat { Summary, Json, Dot };

std::string emitTree(const ResolutionTree& tree, EmitFormat format);

// The final charts of a JSON-emitted tree, as a problem file.
ProblemFile finalChartsFromJson(const std::string& text);

} // namespace wres
