#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "wres/algebra/order.hpp"

namespace wres {

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

class PolyRing {
public:
    static Ring make(std::vector<std::string> variables, MonomialOrder order = MonomialOrder::degrevlex());

    std::size_t size() const { return vars_.size(); }
    const std::vector<std::string>& variables() const { return vars_; }
    const std::string& variable(std::size_t i) const { return vars_[i]; }
    const MonomialOrder& order() const { return order_; }
    std::optional<std::size_t> indexOf(const std::string& name) const;

    // base, or base followed by the smallest numeric suffix not already in use
    std::string freshName(const std::string& base, const std::vector<std::string>& taken = {}) const;

    bool sameVariables(const PolyRing& o) const { return vars_ == o.vars_; }

private:
    PolyRing(std::vector<std::string> v, MonomialOrder o) : vars_(std::move(v)), order_(o) {}

    std::vector<std::string> vars_;
    MonomialOrder order_;
};

inline bool sameRing(const Ring& a, const Ring& b) {
    return a == b || (a && b && a->sameVariables(*b));
}

// Throws RingMismatch unless the rings have identical variable lists.
void requireSameRing(const Ring& a, const Ring& b, const char* where);

} // namespace wres
