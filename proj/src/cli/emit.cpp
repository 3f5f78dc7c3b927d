#include "wres/cli/emit.hpp"

#include <sstream>

#include <json.hpp>

#include "wres/error.hpp"

namespace wres {

namespace {

using nlohmann::json;

std::vector<std::string> canonicalStrings(const Ideal& i) {
    std::vector<std::string> out;
    Ideal c = i.canonical();
    for (const auto& g : c.generators()) out.push_back(g.toString());
    return out;
}

std::string joined(const std::vector<std::string>& xs) {
    std::string s = "(";
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ", " : "") + xs[k];
    return s + ")";
}

std::string weightsString(const std::vector<unsigned long>& w) {
    std::vector<std::string> xs;
    for (auto v : w) xs.push_back(std::to_string(v));
    return joined(xs);
}

const char* roleName(ChartRole r) {
    switch (r) {
    case ChartRole::Input: return "input";
    case ChartRole::BlowUp: return "blowup";
    case ChartRole::PassThrough: return "passthrough";
    }
    return "?";
}

std::size_t centers(const ResolutionTree& t) {
    std::size_t n = 0;
    for (const auto& s : t.steps) n += s.winnerPieces;
    return n;
}

// Every chart with the step that produced it (0 for inputs).
std::vector<std::pair<std::size_t, const TreeChart*>> allCharts(const ResolutionTree& t) {
    std::vector<std::pair<std::size_t, const TreeChart*>> out;
    for (const auto& c : t.input) out.emplace_back(0, &c);
    for (std::size_t s = 0; s < t.steps.size(); ++s)
        for (const auto& c : t.steps[s].charts) out.emplace_back(s + 1, &c);
    return out;
}

std::string chartLine(const TreeChart& c) {
    std::ostringstream os;
    os << "chart " << c.id << " [" << roleName(c.role);
    if (c.parent) os << " of " << *c.parent;
    if (c.blowup) os << ", chart " << c.blowup->index + 1;
    os << "]: ring " << joined(c.variety.ring()->variables());
    if (!c.variety.ideal().isZero()) os << " mod " << joined(canonicalStrings(c.variety.ideal()));
    os << "; transform " << joined(canonicalStrings(c.ideal));
    return os.str();
}

std::string summary(const ResolutionTree& t) {
    std::ostringstream os;
    if (t.steps.empty()) {
        os << "already smooth; 0 blowups\n";
        for (const auto& c : t.input) os << chartLine(c) << "\n";
        return os.str();
    }
    for (std::size_t s = 0; s < t.steps.size(); ++s) {
        const auto& st = t.steps[s];
        os << "step " << s + 1 << ": maxinv " << invariantToString(st.maxinv) << " weights " << weightsString(st.weights)
           << " centers " << st.winnerPieces << " calls " << st.blowUps << " charts " << st.charts.size() << "\n";
    }
    Statistics stats = countStatistics(t);
    os << "final maxinv: " << invariantToString(t.finalMaxinv) << "\n";
    os << "blowups: " << centers(t) << "\n";
    os << "blowup calls: " << stats.blowUps << "\n";
    os << "final charts: " << stats.finalCharts << "\n";
    for (const auto& c : t.finalCharts()) os << chartLine(c) << "\n";
    return os.str();
}

std::string toJson(const ResolutionTree& t) {
    json j = json::object();
    j["codim"] = t.codim;
    j["finalMaxinv"] = invariantToString(t.finalMaxinv);
    Statistics stats = countStatistics(t);
    j["statistics"] = {{"blowups", centers(t)}, {"calls", stats.blowUps}, {"finalCharts", stats.finalCharts}};
    j["steps"] = json::array();
    for (const auto& st : t.steps) {
        json ids = json::array();
        for (const auto& c : st.charts) ids.push_back(c.id);
        j["steps"].push_back({{"maxinv", invariantToString(st.maxinv)},
                              {"weights", st.weights},
                              {"centers", st.winnerPieces},
                              {"calls", st.blowUps},
                              {"charts", ids}});
    }
    j["charts"] = json::array();
    const std::size_t last = t.steps.size();
    for (const auto& [step, c] : allCharts(t)) {
        json e = {{"id", c->id},
                  {"step", step},
                  {"role", roleName(c->role)},
                  {"final", step == last},
                  {"ring", c->variety.ring()->variables()},
                  {"ambient", canonicalStrings(c->variety.ideal())},
                  {"ideal", canonicalStrings(c->ideal)}};
        e["parent"] = c->parent ? json(*c->parent) : json(nullptr);
        if (c->blowup) {
            std::vector<std::string> images;
            for (const auto& p : c->blowup->map.images) images.push_back(p.toString());
            e["map"] = images;
            e["chart"] = c->blowup->index + 1;
            e["grading"] = {{"degrees", c->blowup->grading.degrees}, {"order", c->blowup->grading.order}};
            e["exceptional"] = c->variety.ring()->variable(c->blowup->exceptional);
        }
        j["charts"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

std::string toDot(const ResolutionTree& t) {
    std::ostringstream os;
    os << "digraph resolution {\n  node [shape=box];\n";
    for (const auto& [step, c] : allCharts(t)) {
        os << "  c" << c->id << " [label=\"" << c->id << " (step " << step << ")\\n"
           << joined(canonicalStrings(c->ideal)) << "\"];\n";
        if (c->parent)
            os << "  c" << *c->parent << " -> c" << c->id << " [label=\"" << roleName(c->role) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace

std::string emitTree(const ResolutionTree& tree, EmitFormat format) {
    switch (format) {
    case EmitFormat::Summary: return summary(tree);
    case EmitFormat::Json: return toJson(tree);
    case EmitFormat::Dot: return toDot(tree);
    }
    return {};
}

ProblemFile finalChartsFromJson(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ParseError, std::string("tree: ") + e.what());
    }
    ProblemFile p;
    try {
        for (const auto& c : j.at("charts")) {
            if (!c.at("final").get<bool>()) continue;
            p.charts.push_back({c.at("ring").get<std::vector<std::string>>(),
                                c.at("ambient").get<std::vector<std::string>>(),
                                c.at("ideal").get<std::vector<std::string>>()});
        }
        p.codim = j.at("codim").get<std::size_t>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("tree: ") + e.what());
    }
    return p;
}

} // namespace wres
