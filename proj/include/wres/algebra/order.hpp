#pragma once

#include <cstddef>
#include <string>

#include "wres/algebra/monomial.hpp"

namespace wres {

enum class OrderKind { Lex, DegRevLex, Block };

// Block(k): degrevlex on the first k variables, ties broken by degrevlex on
// the rest. Eliminates the first k variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::DegRevLex;
    std::size_t block = 0;

    static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
    static MonomialOrder degrevlex() { return {OrderKind::DegRevLex, 0}; }
    static MonomialOrder eliminating(std::size_t k) { return {OrderKind::Block, k}; }

    // <0, 0, >0 as a <, =, > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string name() const;

    friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
        return a.kind == b.kind && (a.kind != OrderKind::Block || a.block == b.block);
    }
};

struct MonomialOrderHash {
    std::size_t operator()(const MonomialOrder& o) const {
        return static_cast<std::size_t>(o.kind) * 1000003u + (o.kind == OrderKind::Block ? o.block : 0);
    }
};

} // namespace wres
