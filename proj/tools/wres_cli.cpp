#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "wres/cli/bench.hpp"
#include "wres/cli/emit.hpp"
#include "wres/cli/parse.hpp"
#include "wres/error.hpp"

using namespace wres;

namespace {

struct Flags {
    std::string ring, ambient, ideal, input;
    std::size_t order = 1;
    std::string weights, params;
    std::optional<std::size_t> maxSteps;
    std::string emit = "summary";
    double budget = 300;
    std::vector<std::size_t> rows;
    bool noTimes = false;
};

void addChartFlags(CLI::App* cmd, Flags& f) {
    cmd->add_option("--ring", f.ring, "comma-separated variables");
    cmd->add_option("--ambient", f.ambient, "generators of the smooth ambient ideal, separated by ';' or ','");
    cmd->add_option("--ideal", f.ideal, "generators of the ideal, separated by ';' or ','");
    cmd->add_option("--input", f.input, "JSON problem file");
}

std::vector<ChartInput> charts(const Flags& f) {
    if (!f.input.empty()) return buildCharts(readProblemFile(f.input));
    if (f.ring.empty()) throw Error(ErrorKind::ParseError, "--ring or --input is required");
    return buildCharts(problemFromFlags(f.ring, f.ambient, f.ideal));
}

ChartInput oneChart(const Flags& f) {
    auto cs = charts(f);
    if (cs.size() != 1) throw Error(ErrorKind::ArityMismatch, "this command takes exactly one chart");
    return cs.front();
}

std::string orderString(const std::optional<std::size_t>& o) { return o ? std::to_string(*o) : "infinity"; }

std::string listString(const std::vector<Polynomial>& ps) { return Ideal(ps.front().ring(), ps).toString(); }

std::vector<unsigned long> parseWeights(const std::string& text) {
    std::vector<unsigned long> out;
    std::stringstream ss(text);
    for (std::string w; std::getline(ss, w, ',');) {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(w, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != w.size() || w.empty() || w[0] == '-') throw Error(ErrorKind::ParseError, "bad weight '" + w + "'");
        out.push_back(v);
    }
    return out;
}

void runDiff(const Flags& f) {
    auto c = oneChart(f);
    auto r = diffIterated(c.variety, c.ideal, f.order);
    std::cout << r.ideal.canonical().toString() << "\n";
}

void runMaxord(const Flags& f) {
    auto c = oneChart(f);
    std::cout << orderString(maximalOrderOfVanishing(c.variety, c.ideal)) << "\n";
}

void runContact(const Flags& f) {
    auto c = oneChart(f);
    auto cover = maximalContact(c.variety, c.ideal);
    std::cout << "order: " << cover.order << "\n";
    for (const auto& e : cover.entries) std::cout << "on " << e.g.toString() << " != 0: " << e.f.toString() << "\n";
}

void runMaxinv(const Flags& f) {
    std::cout << invariantToString(prepareCenter(charts(f)).maxinv) << "\n";
}

void runCenter(const Flags& f) {
    auto d = prepareCenter(charts(f));
    std::cout << "maxinv: " << invariantToString(d.maxinv) << "\n";
    if (d.maxinv.empty()) return;
    std::cout << "weights: (";
    auto w = reducedCenterWeights(d.maxinv);
    for (std::size_t k = 0; k < w.size(); ++k) std::cout << (k ? ", " : "") << w[k];
    std::cout << ")\n";
    for (const auto& win : d.winners)
        std::cout << "center on chart " << win.piece.origin << " in " << win.piece.variety.ideal().toString() << ": "
                  << listString(win.params) << "\n";
    std::cout << "losers: " << d.losers.size() << "\n";
}

void runBlowup(const Flags& f) {
    auto c = oneChart(f);
    std::string list = f.params;
    std::replace(list.begin(), list.end(), ',', ';');
    auto params = parsePolynomialList(list, c.variety.ring());
    auto charts = weightedBlowUp(c.variety, c.ideal, params, parseWeights(f.weights));
    const auto& src = c.variety.ring()->variables();
    for (const auto& ch : charts) {
        std::cout << "chart " << ch.index + 1 << ": ring (";
        const auto& vs = ch.ring()->variables();
        for (std::size_t k = 0; k < vs.size(); ++k) std::cout << (k ? ", " : "") << vs[k];
        std::cout << ")\n  map:";
        for (std::size_t k = 0; k < src.size(); ++k) std::cout << " " << src[k] << " -> " << ch.map.images[k].toString() << ";";
        std::cout << "\n";
        if (!ch.variety.ideal().isZero()) std::cout << "  chart ideal: " << ch.variety.ideal().toString() << "\n";
        std::cout << "  total transform: " << ch.totalTransform.canonical().toString() << "\n";
        std::cout << "  transform: " << ch.transform.toString() << "\n";
        std::cout << "  grading: order " << ch.grading.order << ", degrees (";
        for (std::size_t k = 0; k < ch.grading.degrees.size(); ++k) std::cout << (k ? ", " : "") << ch.grading.degrees[k];
        std::cout << ")\n";
    }
}

void runResolve(const Flags& f) {
    EmitFormat fmt = f.emit == "json" ? EmitFormat::Json : f.emit == "dot" ? EmitFormat::Dot : EmitFormat::Summary;
    ResolutionProblem problem =
        f.input.empty() ? makeProblem(charts(f)) : buildProblem(readProblemFile(f.input));
    ResolutionOptions opts;
    opts.maxSteps = f.maxSteps;
    std::cout << emitTree(weightedResolution(problem, opts), fmt);
}

void runBench(const Flags& f) {
    std::vector<BenchRow> rows;
    if (!f.input.empty() || !f.ring.empty()) {
        auto p = f.input.empty() ? problemFromFlags(f.ring, f.ambient, f.ideal) : readProblemFile(f.input);
        if (p.charts.size() != 1 || p.charts[0].ideal.size() != 1 || !p.charts[0].ambient.empty())
            throw Error(ErrorKind::ArityMismatch, "bench rows are single hypersurfaces in affine space");
        std::string ring;
        for (const auto& v : p.charts[0].ring) ring += (ring.empty() ? "" : ",") + v;
        rows.push_back({ring, p.charts[0].ideal[0], std::nullopt, false});
    } else {
        const auto& all = standardRows();
        if (f.rows.empty()) rows = all;
        for (auto k : f.rows) {
            if (k == 0 || k > all.size()) throw Error(ErrorKind::ParseError, "row index out of range");
            rows.push_back(all[k - 1]);
        }
    }
    std::vector<BenchResult> results;
    for (const auto& r : rows) results.push_back(runBenchRow(r, f.budget));
    std::cout << benchReport(results, !f.noTimes);
}

int exitCode(ErrorKind k) {
    switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownVariable: return 2;
    case ErrorKind::StepLimit:
    case ErrorKind::WorkLimit:
    case ErrorKind::Timeout: return 4;
    default: return 3;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weighted resolution of singularities over the rationals"};
    app.require_subcommand(1);
    Flags f;

    auto* diffCmd = app.add_subcommand("diff", "iterated derivative ideal D^{<=k} I");
    addChartFlags(diffCmd, f);
    diffCmd->add_option("--order", f.order, "number of derivatives")->check(CLI::PositiveNumber);
    addChartFlags(app.add_subcommand("maxord", "maximal order of vanishing"), f);
    addChartFlags(app.add_subcommand("contact", "maximal contact cover"), f);
    addChartFlags(app.add_subcommand("maxinv", "maximal invariant over all charts"), f);
    addChartFlags(app.add_subcommand("center", "invariant, weights and center"), f);
    auto* blowCmd = app.add_subcommand("blowup", "charts of a weighted blow-up");
    addChartFlags(blowCmd, f);
    blowCmd->add_option("--params", f.params, "regular parameters, separated by ';' or ','")->required();
    blowCmd->add_option("--weights", f.weights, "positive integer weights, comma-separated")->required();
    auto* resCmd = app.add_subcommand("resolve", "weighted resolution");
    addChartFlags(resCmd, f);
    resCmd->add_option("--max-steps", f.maxSteps, "round limit");
    resCmd->add_option("--emit", f.emit, "summary, json or dot")
        ->check(CLI::IsMember({"summary", "json", "dot"}));
    auto* benchCmd = app.add_subcommand("bench", "benchmark table");
    addChartFlags(benchCmd, f);
    benchCmd->add_option("--budget", f.budget, "seconds per row")->check(CLI::PositiveNumber);
    benchCmd->add_option("--row", f.rows, "1-based row of the standard table, repeatable");
    benchCmd->add_flag("--no-times", f.noTimes, "omit wall times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "diff") runDiff(f);
        else if (cmd == "maxord") runMaxord(f);
        else if (cmd == "contact") runContact(f);
        else if (cmd == "maxinv") runMaxinv(f);
        else if (cmd == "center") runCenter(f);
        else if (cmd == "blowup") runBlowup(f);
        else if (cmd == "resolve") runResolve(f);
        else runBench(f);
    } catch (const Error& e) {
        std::cout.flush();
        std::cerr << "error " << errorTag(e.kind()) << ": " << e.what() << "\n";
        return exitCode(e.kind());
    }
    return 0;
}
