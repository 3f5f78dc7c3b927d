#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wres/blowup/blowup.hpp"
#include "wres/center/center.hpp"

namespace wres {

struct ResolutionProblem {
    std::vector<ChartInput> charts;
    std::size_t codim = 0;
};

// Computes codim from the charts; throws NotPureDimensional if they disagree.
ResolutionProblem makeProblem(std::vector<ChartInput> charts);

enum class ChartRole { Input, BlowUp, PassThrough };

struct TreeChart {
    std::size_t id = 0;
    std::optional<std::size_t> parent;
    ChartRole role = ChartRole::Input;
    SmoothVariety variety;
    Ideal ideal;  // the proper transform, or the carried ideal for pass-through charts
    std::optional<BlowUpChart> blowup;
    // Pass-through charts: the localized presentation of the parent.
    std::optional<SmoothVariety> localization;
};

struct ResolutionStep {
    Invariant maxinv;
    std::vector<unsigned long> weights;
    // One blow-up per chart of the cover entering the step; charts that lose
    // the competition are blown up along (1), which is the identity.
    std::size_t blowUps = 0;
    std::size_t winnerPieces = 0;
    std::vector<TreeChart> charts;
};

struct ResolutionTree {
    std::vector<TreeChart> input;
    std::vector<ResolutionStep> steps;
    Invariant finalMaxinv;
    std::size_t codim = 0;

    const std::vector<TreeChart>& finalCharts() const { return steps.empty() ? input : steps.back().charts; }
};

bool isResolved(const Invariant& maxinv, std::size_t c);

// Jacobian criterion on the chart's subvariety, independent of the invariant.
bool transformIsSmooth(const TreeChart& chart, std::size_t codim);

struct ResolutionOptions {
    std::optional<std::size_t> maxSteps;  // default: ambient dimension times 10
    std::size_t workLimit = defaultWorkLimit;
};

ResolutionTree weightedResolution(const ResolutionProblem& problem, const ResolutionOptions& options = {});

struct Statistics {
    std::size_t blowUps = 0;
    std::size_t finalCharts = 0;
};
Statistics countStatistics(const ResolutionTree& tree);

} // namespace wres
