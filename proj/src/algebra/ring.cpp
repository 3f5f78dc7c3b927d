#include "wres/algebra/ring.hpp"

#include <algorithm>
#include <set>

#include "wres/error.hpp"

namespace wres {

Ring PolyRing::make(std::vector<std::string> variables, MonomialOrder order) {
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw Error(ErrorKind::PreconditionViolation, "empty variable name");
        if (!seen.insert(v).second)
            throw Error(ErrorKind::PreconditionViolation, "duplicate variable name '" + v + "'");
    }
    return Ring(new PolyRing(std::move(variables), order));
}

std::optional<std::size_t> PolyRing::indexOf(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

std::string PolyRing::freshName(const std::string& base, const std::vector<std::string>& taken) const {
    auto used = [&](const std::string& s) {
        return indexOf(s).has_value() || std::find(taken.begin(), taken.end(), s) != taken.end();
    };
    if (!used(base)) return base;
    for (std::size_t k = 1;; ++k) {
        std::string cand = base + "_" + std::to_string(k);
        if (!used(cand)) return cand;
    }
}

void requireSameRing(const Ring& a, const Ring& b, const char* where) {
    if (!sameRing(a, b)) throw Error(ErrorKind::RingMismatch, std::string(where) + ": ring mismatch");
}

} // namespace wres
