#include "wres/cli/problem.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wres/cli/parse.hpp"
#include "wres/error.hpp"

namespace wres {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::ParseError, "problem file: " + msg); }

// Either ["x", "y"] or "x,y".
std::vector<std::string> names(const json& j, const char* key) {
    if (j.is_string()) return parseVariableList(j.get<std::string>());
    if (!j.is_array()) bad(std::string("'") + key + "' must be a list of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) bad(std::string("'") + key + "' must be a list of strings");
        out.push_back(e.get<std::string>());
    }
    return out;
}

// Either a list of generators or one "a; b" string.
std::vector<std::string> gens(const json& j, const char* key) {
    if (j.is_string()) {
        std::vector<std::string> out;
        std::stringstream ss(j.get<std::string>());
        for (std::string piece; std::getline(ss, piece, ';');)
            if (piece.find_first_not_of(" \t\n") != std::string::npos) out.push_back(piece);
        return out;
    }
    return names(j, key);
}

ProblemChart chartFrom(const json& j, const std::vector<std::string>& ring) {
    if (!j.is_object()) bad("each chart must be an object");
    ProblemChart c;
    c.ring = j.contains("ring") ? names(j["ring"], "ring") : ring;
    if (c.ring.empty()) bad("chart without a ring");
    if (j.contains("ambient")) c.ambient = gens(j["ambient"], "ambient");
    if (j.contains("ideal")) c.ideal = gens(j["ideal"], "ideal");
    return c;
}

} // namespace

ProblemFile readProblemJson(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(e.what());
    }
    if (!j.is_object()) bad("top level must be an object");
    ProblemFile p;
    if (j.contains("name")) {
        if (!j["name"].is_string()) bad("'name' must be a string");
        p.name = j["name"].get<std::string>();
    }
    std::vector<std::string> ring;
    if (j.contains("ring")) ring = names(j["ring"], "ring");
    if (j.contains("charts")) {
        if (!j["charts"].is_array() || j["charts"].empty()) bad("'charts' must be a nonempty list");
        for (const auto& c : j["charts"]) p.charts.push_back(chartFrom(c, ring));
    } else {
        p.charts.push_back(chartFrom(j, ring));
    }
    if (j.contains("codim")) {
        if (!j["codim"].is_number_unsigned()) bad("'codim' must be a nonnegative integer");
        p.codim = j["codim"].get<std::size_t>();
    }
    return p;
}

ProblemFile readProblemFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return readProblemJson(ss.str());
}

std::string problemToJson(const ProblemFile& p) {
    json j = json::object();
    if (!p.name.empty()) j["name"] = p.name;
    j["charts"] = json::array();
    for (const auto& c : p.charts) j["charts"].push_back({{"ring", c.ring}, {"ambient", c.ambient}, {"ideal", c.ideal}});
    if (p.codim) j["codim"] = *p.codim;
    return j.dump(2);
}

ProblemFile problemFromFlags(const std::string& ring, const std::string& ambient, const std::string& ideal) {
    ProblemFile p;
    auto semi = [](std::string s) {
        std::replace(s.begin(), s.end(), ',', ';');
        return json(s);
    };
    p.charts.push_back({parseVariableList(ring), gens(semi(ambient), "ambient"), gens(semi(ideal), "ideal")});
    if (p.charts[0].ring.empty()) bad("empty ring");
    return p;
}

std::vector<ChartInput> buildCharts(const ProblemFile& p) {
    if (p.charts.empty()) throw Error(ErrorKind::PreconditionViolation, "no charts given");
    std::vector<ChartInput> out;
    for (const auto& c : p.charts) {
        for (std::size_t a = 0; a < c.ring.size(); ++a)
            for (std::size_t b = a + 1; b < c.ring.size(); ++b)
                if (c.ring[a] == c.ring[b]) bad("variable '" + c.ring[a] + "' listed twice");
        Ring r = PolyRing::make(c.ring);
        std::vector<Polynomial> amb, id;
        for (const auto& s : c.ambient) amb.push_back(parsePolynomial(s, r));
        for (const auto& s : c.ideal) id.push_back(parsePolynomial(s, r));
        SmoothVariety y = amb.empty() ? SmoothVariety::affineSpace(r) : SmoothVariety::make(Ideal(r, amb));
        out.push_back({y, Ideal(r, id)});
    }
    return out;
}

ResolutionProblem buildProblem(const ProblemFile& p) {
    ResolutionProblem prob = makeProblem(buildCharts(p));
    if (p.codim && *p.codim != prob.codim)
        throw Error(ErrorKind::PreconditionViolation, "codim override " + std::to_string(*p.codim) +
                                                          " disagrees with the computed codimension " +
                                                          std::to_string(prob.codim));
    return prob;
}

} // namespace wres
