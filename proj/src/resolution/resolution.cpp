#include "wres/resolution/resolution.hpp"

#include <algorithm>

#include "wres/algebra/groebner.hpp"
#include "wres/budget.hpp"
#include "wres/error.hpp"

namespace wres {

ResolutionProblem makeProblem(std::vector<ChartInput> charts) {
    if (charts.empty()) throw Error(ErrorKind::PreconditionViolation, "a problem needs at least one chart");
    std::optional<std::size_t> codim;
    for (const auto& c : charts) {
        requireSameRing(c.variety.ring(), c.ideal.ring(), "makeProblem");
        Ideal x = c.ideal.plus(c.variety.ideal());
        auto d = krullDimension(x.ring(), x.generators());
        if (!d) throw Error(ErrorKind::PreconditionViolation, "the subvariety is empty on a chart");
        std::size_t k = c.variety.dim() - *d;
        if (codim && *codim != k)
            throw Error(ErrorKind::NotPureDimensional,
                        "charts disagree on codimension: " + std::to_string(*codim) + " vs " + std::to_string(k));
        codim = k;
    }
    return {std::move(charts), *codim};
}

bool isResolved(const Invariant& maxinv, std::size_t c) {
    return maxinv.size() == c && std::all_of(maxinv.begin(), maxinv.end(), [](const Rational& a) { return a == 1; });
}

bool transformIsSmooth(const TreeChart& chart, std::size_t codim) {
    Ideal x = chart.ideal.plus(chart.variety.ideal());
    if (x.isUnit()) return true;
    return isSmoothOfCodim(x.canonical(), chart.variety.codim() + codim);
}

ResolutionTree weightedResolution(const ResolutionProblem& problem, const ResolutionOptions& options) {
    ResolutionTree tree;
    tree.codim = problem.codim;
    std::size_t nextId = 0, ambient = 1;
    for (const auto& c : problem.charts) {
        TreeChart t;
        t.id = nextId++;
        t.variety = c.variety;
        t.ideal = c.ideal;
        tree.input.push_back(std::move(t));
        ambient = std::max(ambient, c.variety.dim());
    }
    const std::size_t maxSteps = options.maxSteps.value_or(ambient * 10);

    std::vector<TreeChart> current = tree.input;
    while (!current.empty()) {
        std::vector<ChartInput> inputs;
        for (const auto& c : current) inputs.push_back({c.variety, c.ideal});
        CenterData d = prepareCenter(inputs, {options.workLimit});
        tree.finalMaxinv = d.maxinv;
        if (isResolved(d.maxinv, problem.codim)) break;
        if (!tree.steps.empty() && compareInvariant(d.maxinv, tree.steps.back().maxinv) != std::strong_ordering::less)
            throw Error(ErrorKind::InvariantViolation, "maxinv did not drop: " + invariantToString(tree.steps.back().maxinv) +
                                                           " then " + invariantToString(d.maxinv));
        if (tree.steps.size() >= maxSteps)
            throw Error(ErrorKind::StepLimit, "no resolution within " + std::to_string(maxSteps) +
                                                  " steps; current maxinv " + invariantToString(d.maxinv));

        ResolutionStep step;
        step.maxinv = d.maxinv;
        step.weights = reducedCenterWeights(d.maxinv);
        step.blowUps = current.size();
        step.winnerPieces = d.winners.size();
        for (const auto& w : d.winners) {
            checkDeadline();
            const TreeChart& parent = current[w.piece.origin];
            auto charts = weightedBlowUp(w.piece.variety, w.piece.ideal, w.params, step.weights);
            for (auto& c : charts) {
                if (c.transform.isUnit()) continue;
                TreeChart t;
                t.id = nextId++;
                t.parent = parent.id;
                t.role = ChartRole::BlowUp;
                t.variety = SmoothVariety::trusted(c.variety.ideal(), c.variety.dim(), true);
                t.ideal = c.transform;
                t.blowup = std::move(c);
                step.charts.push_back(std::move(t));
            }
        }
        for (const auto& l : d.losers) {
            if (l.ideal.plus(l.variety.ideal()).isUnit()) continue;
            TreeChart t;
            t.id = nextId++;
            t.parent = current[l.origin].id;
            t.role = ChartRole::PassThrough;
            t.variety = l.variety;
            t.ideal = l.ideal;
            t.localization = l.variety;
            step.charts.push_back(std::move(t));
        }
        tree.steps.push_back(std::move(step));
        current = tree.steps.back().charts;
    }
    return tree;
}

Statistics countStatistics(const ResolutionTree& tree) {
    Statistics s;
    for (const auto& step : tree.steps) s.blowUps += step.blowUps;
    s.finalCharts = tree.finalCharts().size();
    return s;
}

} // namespace wres
