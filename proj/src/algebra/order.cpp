#include "wres/algebra/order.hpp"

namespace wres {

namespace {

int degrevlexRange(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    std::uint64_t da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.size();
    switch (kind) {
    case OrderKind::Lex:
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    case OrderKind::DegRevLex:
        if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
        for (std::size_t i = n; i-- > 0;)
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
        return 0;
    case OrderKind::Block: {
        const std::size_t k = block < n ? block : n;
        if (int c = degrevlexRange(a, b, 0, k)) return c;
        return degrevlexRange(a, b, k, n);
    }
    }
    return 0;
}

std::string MonomialOrder::name() const {
    switch (kind) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::Block: return "block(" + std::to_string(block) + ")";
    }
    return "?";
}

} // namespace wres
