#pragma once

#include <string>
#include <vector>

#include "wres/algebra/groebner.hpp"
#include "wres/cli/parse.hpp"

namespace testing {

inline wres::Ring ring(const std::string& vars) { return wres::PolyRing::make(wres::parseVariableList(vars)); }

inline wres::Polynomial poly(const wres::Ring& r, const std::string& s) { return wres::parsePolynomial(s, r); }

inline std::vector<wres::Polynomial> polys(const wres::Ring& r, const std::string& s) {
    return wres::parsePolynomialList(s, r);
}

inline std::vector<std::string> strings(const std::vector<wres::Polynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.toString());
    return out;
}

} // namespace testing
