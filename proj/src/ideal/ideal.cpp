#include "wres/ideal/ideal.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "wres/budget.hpp"
#include "wres/error.hpp"

namespace wres {

struct Ideal::Cache {
    std::mutex mutex;
    std::unordered_map<MonomialOrder, GroebnerBasis, MonomialOrderHash> bases;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
        requireSameRing(ring_, g.ring(), "Ideal");
        if (!g.isZero()) gens_.push_back(std::move(g));
    }
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->bases.find(order);
        if (it != cache_->bases.end()) return it->second;
    }
    GroebnerBasis gb = groebnerBasis(ring_, gens_, order);
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return cache_->bases.emplace(order, std::move(gb)).first->second;
}

namespace {

std::vector<std::vector<std::size_t>> trialOrders(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    auto add = [&](std::vector<std::size_t> p) {
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    std::vector<std::size_t> id(n);
    for (std::size_t k = 0; k < n; ++k) id[k] = k;
    add(id);
    add(std::vector<std::size_t>(id.rbegin(), id.rend()));
    for (std::size_t shift = 1; shift < n && out.size() < 6; ++shift) {
        std::vector<std::size_t> p(n);
        for (std::size_t k = 0; k < n; ++k) p[k] = (k + shift) % n;
        add(std::move(p));
    }
    return out;
}

} // namespace

// Whether an ideal is (1) does not depend on the variable order, while the
// cost of finding out does, wildly; so several orders race under growing
// work budgets.
bool Ideal::isUnit() const {
    for (const auto& g : gens_)
        if (g.isConstant()) return true;
    if (gens_.empty()) return false;
    const MonomialOrder drl = MonomialOrder::degrevlex();
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->bases.find(drl);
        if (it != cache_->bases.end()) return it->second.isUnit();
    }
    const std::size_t n = ring_->size();
    if (n < 2) return groebner().isUnit();
    const auto orders = trialOrders(n);
    for (std::size_t work = 20000;; work *= 4) {
        for (std::size_t o = 0; o < orders.size(); ++o) {
            checkDeadline();
            if (o == 0) {
                auto gb = groebnerBasisWithin(ring_, gens_, drl, work);
                if (!gb) continue;
                std::lock_guard<std::mutex> lock(cache_->mutex);
                return cache_->bases.emplace(drl, std::move(*gb)).first->second.isUnit();
            }
            std::vector<std::string> names(n);
            std::vector<std::size_t> index(n);
            for (std::size_t k = 0; k < n; ++k) {
                names[k] = ring_->variable(orders[o][k]);
                index[orders[o][k]] = k;
            }
            Ring permuted = PolyRing::make(names);
            std::vector<Polynomial> moved;
            for (const auto& g : gens_) moved.push_back(g.relabel(index, permuted));
            auto gb = groebnerBasisWithin(permuted, moved, drl, work);
            if (!gb) continue;
            if (!gb->isUnit()) return false;
            GroebnerBasis one = groebnerBasis(ring_, {Polynomial::constant(ring_, 1)}, drl);
            std::lock_guard<std::mutex> lock(cache_->mutex);
            cache_->bases.emplace(drl, std::move(one));
            return true;
        }
    }
}

bool Ideal::isZero() const { return gens_.empty(); }

Polynomial Ideal::reduce(const Polynomial& f) const {
    if (gens_.empty()) return f;
    return normalForm(f, groebner());
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.isZero()) return true;
    if (gens_.empty()) return false;
    return normalForm(f, groebner()).isZero();
}

bool Ideal::contains(const Ideal& j) const {
    requireSameRing(ring_, j.ring_, "contains");
    for (const auto& g : j.gens_)
        if (!contains(g)) return false;
    return true;
}

Ideal Ideal::canonical() const {
    Ideal out(*this);
    out.gens_ = groebner().generators;
    return out;
}

Ideal Ideal::plus(const Ideal& o) const {
    requireSameRing(ring_, o.ring_, "plus");
    return plus(o.gens_);
}

Ideal Ideal::plus(const std::vector<Polynomial>& more) const {
    std::vector<Polynomial> g = gens_;
    g.insert(g.end(), more.begin(), more.end());
    return Ideal(ring_, std::move(g));
}

Ideal Ideal::times(const Ideal& o) const {
    requireSameRing(ring_, o.ring_, "times");
    std::vector<Polynomial> g;
    for (const auto& a : gens_)
        for (const auto& b : o.gens_) g.push_back(a * b);
    return Ideal(ring_, std::move(g));
}

std::string Ideal::toString() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].toString();
    }
    if (gens_.empty()) s += "0";
    return s + ")";
}

Containment idealCompare(const Ideal& i, const Ideal& j) {
    requireSameRing(i.ring(), j.ring(), "idealCompare");
    bool ji = i.contains(j);
    bool ij = j.contains(i);
    if (ij && ji) return Containment::Equal;
    if (ij) return Containment::FirstInSecond;
    if (ji) return Containment::SecondInFirst;
    return Containment::Incomparable;
}

Ideal idealPower(const Ideal& i, unsigned long n) {
    if (n == 0 || i.isUnit()) return Ideal::unit(i.ring());
    if (i.isZero()) return i;
    Ideal result;
    bool have = false;
    Ideal base = i.canonical();
    while (n) {
        if (n & 1) {
            result = have ? result.times(base).canonical() : base;
            have = true;
        }
        n >>= 1;
        if (n) base = base.times(base).canonical();
    }
    return result;
}

namespace {

// Ring with `extra` fresh variables prepended.
Ring prependVariables(const Ring& r, std::size_t extra) {
    std::vector<std::string> names;
    std::vector<std::string> taken;
    for (std::size_t k = 0; k < extra; ++k) {
        names.push_back(r->freshName("t" + std::to_string(k), taken));
        taken.push_back(names.back());
    }
    names.insert(names.end(), r->variables().begin(), r->variables().end());
    return PolyRing::make(names);
}

std::vector<std::size_t> shiftIndex(std::size_t n, std::size_t by) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i + by;
    return idx;
}

// Generators of (gens) intersected with k[x_k, ..., x_{n-1}], presented in `small`.
std::vector<Polynomial> eliminateLeading(const Ring& big, const std::vector<Polynomial>& gens, std::size_t k,
                                         const Ring& small) {
    GroebnerBasis gb = groebnerBasis(big, gens, MonomialOrder::eliminating(k));
    std::vector<std::size_t> idx(big->size());
    for (std::size_t i = 0; i < big->size(); ++i) idx[i] = i < k ? small->size() : i - k;
    std::vector<Polynomial> out;
    for (const auto& g : gb.generators) {
        bool free = true;
        for (std::size_t v = 0; v < k && free; ++v) free = !g.involves(v);
        if (free) out.push_back(g.relabel(idx, small));
    }
    return out;
}

} // namespace

Ideal intersect(const Ideal& i, const Ideal& j) {
    requireSameRing(i.ring(), j.ring(), "intersect");
    if (i.isZero() || j.isZero()) return Ideal(i.ring());
    if (i.isUnit()) return j;
    if (j.isUnit()) return i;
    const Ring& r = i.ring();
    Ring rt = prependVariables(r, 1);
    auto idx = shiftIndex(r->size(), 1);
    Polynomial t = Polynomial::variable(rt, 0);
    Polynomial omt = Polynomial::constant(rt, 1) - t;
    std::vector<Polynomial> gens;
    for (const auto& g : i.generators()) gens.push_back(t * g.relabel(idx, rt));
    for (const auto& g : j.generators()) gens.push_back(omt * g.relabel(idx, rt));
    return Ideal(r, eliminateLeading(rt, gens, 1, r));
}

Ideal quotient(const Ideal& i, const Polynomial& g) {
    requireSameRing(i.ring(), g.ring(), "quotient");
    if (g.isZero()) return Ideal::unit(i.ring());
    if (g.isConstant()) return i;
    if (i.isZero()) return i;
    Ideal meet = intersect(i, Ideal(i.ring(), {g}));
    std::vector<Polynomial> out;
    for (const auto& h : meet.generators()) {
        auto q = exactDivide(h, g);
        if (!q) throw Error(ErrorKind::InvariantViolation, "quotient: intersection generator not divisible");
        out.push_back(*q);
    }
    return Ideal(i.ring(), std::move(out)).canonical();
}

Ideal quotient(const Ideal& i, const Ideal& j) {
    requireSameRing(i.ring(), j.ring(), "quotient");
    if (j.isZero()) return Ideal::unit(i.ring());
    Ideal acc = quotient(i, j.generators().front());
    for (std::size_t k = 1; k < j.generators().size() && !acc.isUnit(); ++k)
        acc = intersect(acc, quotient(i, j.generators()[k]));
    return acc.canonical();
}

Ideal saturate(const Ideal& i, const Polynomial& g) {
    requireSameRing(i.ring(), g.ring(), "saturate");
    if (g.isZero()) return Ideal::unit(i.ring());
    if (g.isConstant() || i.isZero()) return i;
    if (i.isUnit()) return i;
    const Ring& r = i.ring();
    Ring rt = prependVariables(r, 1);
    auto idx = shiftIndex(r->size(), 1);
    std::vector<Polynomial> gens;
    for (const auto& f : i.generators()) gens.push_back(f.relabel(idx, rt));
    gens.push_back(Polynomial::constant(rt, 1) - Polynomial::variable(rt, 0) * g.relabel(idx, rt));
    return Ideal(r, eliminateLeading(rt, gens, 1, r));
}

Ideal saturate(const Ideal& i, const Ideal& j) {
    requireSameRing(i.ring(), j.ring(), "saturate");
    if (j.isZero()) return Ideal::unit(i.ring());
    Ideal acc = saturate(i, j.generators().front());
    for (std::size_t k = 1; k < j.generators().size(); ++k)
        acc = intersect(acc, saturate(i, j.generators()[k]));
    return acc.canonical();
}

Elimination eliminate(const Ideal& i, const std::vector<std::size_t>& vars) {
    const Ring& r = i.ring();
    std::vector<char> drop(r->size(), 0);
    for (auto v : vars) {
        if (v >= r->size()) throw Error(ErrorKind::PreconditionViolation, "eliminate: variable out of range");
        drop[v] = 1;
    }
    std::vector<std::string> bigNames, smallNames;
    std::vector<std::size_t> kept;
    for (std::size_t v = 0; v < r->size(); ++v)
        if (drop[v]) bigNames.push_back(r->variable(v));
    const std::size_t k = bigNames.size();
    for (std::size_t v = 0; v < r->size(); ++v)
        if (!drop[v]) {
            bigNames.push_back(r->variable(v));
            smallNames.push_back(r->variable(v));
            kept.push_back(v);
        }
    Ring big = PolyRing::make(bigNames);
    Ring small = PolyRing::make(smallNames);
    std::vector<std::size_t> idx(r->size());
    std::size_t a = 0, b = k;
    for (std::size_t v = 0; v < r->size(); ++v) idx[v] = drop[v] ? a++ : b++;
    std::vector<Polynomial> gens;
    for (const auto& g : i.generators()) gens.push_back(g.relabel(idx, big));
    return Elimination{Ideal(small, eliminateLeading(big, gens, k, small)), kept};
}

RingMap RingMap::identity(const Ring& r) {
    RingMap m{r, r, Ideal(r), {}};
    for (std::size_t i = 0; i < r->size(); ++i) m.images.push_back(Polynomial::variable(r, i));
    return m;
}

Polynomial RingMap::apply(const Polynomial& f) const {
    requireSameRing(source, f.ring(), "RingMap::apply");
    return f.substitute(images, target);
}

Ideal mapImage(const RingMap& phi, const Ideal& i) {
    std::vector<Polynomial> out;
    for (const auto& g : i.generators()) out.push_back(phi.apply(g));
    return Ideal(phi.target, std::move(out));
}

Ideal mapPreimage(const RingMap& phi, const Ideal& j) {
    requireSameRing(phi.target, j.ring(), "mapPreimage");
    const std::size_t ns = phi.source->size(), nt = phi.target->size();
    if (phi.images.size() != ns) throw Error(ErrorKind::ArityMismatch, "RingMap images");
    // A source variable sent to a bare target variable lets that target
    // variable be replaced by it outright.
    std::vector<long> identifiedWith(nt, -1);
    for (std::size_t s = 0; s < ns; ++s) {
        const auto& im = phi.images[s];
        if (im.size() == 1 && im.terms()[0].coef == 1 && im.terms()[0].mono.degree() == 1) {
            std::size_t v = 0;
            while (im.terms()[0].mono[v] == 0) ++v;
            if (identifiedWith[v] < 0) identifiedWith[v] = static_cast<long>(s);
        }
    }
    std::vector<std::string> names;
    std::vector<std::size_t> idx(nt);
    for (std::size_t v = 0; v < nt; ++v)
        if (identifiedWith[v] < 0) {
            idx[v] = names.size();
            names.push_back("@t" + std::to_string(v));
        }
    const std::size_t k = names.size();
    for (std::size_t v = 0; v < nt; ++v)
        if (identifiedWith[v] >= 0) idx[v] = k + static_cast<std::size_t>(identifiedWith[v]);
    for (std::size_t s = 0; s < ns; ++s) names.push_back("@s" + std::to_string(s));
    Ring joint = PolyRing::make(names);

    std::vector<Polynomial> gens;
    for (const auto& g : j.generators()) gens.push_back(g.relabel(idx, joint));
    for (const auto& g : phi.targetQuotient.generators()) gens.push_back(g.relabel(idx, joint));
    for (std::size_t s = 0; s < ns; ++s) {
        Polynomial rel = Polynomial::variable(joint, k + s) - phi.images[s].relabel(idx, joint);
        if (!rel.isZero()) gens.push_back(rel);
    }
    return Ideal(phi.source, eliminateLeading(joint, gens, k, phi.source));
}

Ideal glueIdeals(const std::vector<std::pair<Ideal, Polynomial>>& pieces, const Ideal& base) {
    if (pieces.empty()) throw Error(ErrorKind::PartitionFailure, "glueIdeals: no pieces");
    const Ring& r = pieces.front().first.ring();
    std::vector<Polynomial> hs = base.generators();
    for (const auto& [ideal, h] : pieces) {
        requireSameRing(r, ideal.ring(), "glueIdeals");
        hs.push_back(h);
    }
    if (!Ideal(r, hs).isUnit()) throw Error(ErrorKind::PartitionFailure, "glueIdeals: localizing elements do not generate (1)");
    Ideal acc;
    bool have = false;
    for (const auto& [ideal, h] : pieces) {
        Ideal s = saturate(ideal.plus(base), h);
        acc = have ? intersect(acc, s) : s;
        have = true;
    }
    return acc.canonical();
}

Ideal glueIdeals(const std::vector<std::pair<Ideal, Polynomial>>& pieces) {
    if (pieces.empty()) throw Error(ErrorKind::PartitionFailure, "glueIdeals: no pieces");
    return glueIdeals(pieces, Ideal(pieces.front().first.ring()));
}

} // namespace wres
