#include "wres/contact/contact.hpp"

#include <algorithm>

#include "wres/budget.hpp"
#include "wres/error.hpp"

namespace wres {

namespace {

Polynomial normalizeOn(const SmoothVariety& y, const Polynomial& g) {
    Polynomial r = y.ideal().reduce(g);
    return r.isZero() ? r : r.monic(MonomialOrder::degrevlex());
}

bool invertibleOn(const SmoothVariety& y, const Polynomial& g) { return y.ideal().plus({g}).isUnit(); }

// Spec A[a^-1] = Spec A[b^-1] iff each of a, b lies in the radical of I_Y + (other).
bool sameOpen(const SmoothVariety& y, const Polynomial& a, const Polynomial& b) {
    return saturate(y.ideal().plus({a}), b).isUnit() && saturate(y.ideal().plus({b}), a).isUnit();
}

// Collapse to a singleton when some G is a unit on `unitTest`, otherwise sort and merge duplicates on `y`.
ContactCover finish(const SmoothVariety& unitTest, const SmoothVariety& y, std::vector<ContactEntry> raw,
                    std::size_t order) {
    const Ring& ring = y.ring();
    for (const auto& e : raw)
        if (invertibleOn(unitTest, e.g)) return {{{Polynomial::constant(ring, 1), e.f}}, order};
    for (auto& e : raw) e.g = normalizeOn(y, e.g);
    const auto ord = MonomialOrder::degrevlex();
    std::sort(raw.begin(), raw.end(), [&](const ContactEntry& a, const ContactEntry& b) {
        int c = comparePolynomials(a.g, b.g, ord);
        if (c != 0) return c < 0;
        return comparePolynomials(a.f, b.f, ord) < 0;
    });
    ContactCover out;
    out.order = order;
    for (auto& e : raw) {
        bool dup = std::any_of(out.entries.begin(), out.entries.end(), [&](const ContactEntry& k) {
            return k.f == e.f && (k.g == e.g || sameOpen(y, k.g, e.g));
        });
        if (!dup) out.entries.push_back(std::move(e));
    }
    return out;
}

struct Candidate {
    Polynomial value;
    std::size_t source;  // index into the derivative generators
    bool derivative;
};

} // namespace

SmoothVariety subvariety(const SmoothVariety& y, const std::vector<Polynomial>& params) {
    if (params.empty()) return y;
    Ideal iz = y.ideal().plus(params);
    if (iz.isUnit()) throw Error(ErrorKind::PreconditionViolation, "V" + Ideal(y.ring(), params).toString() + " is empty");
    if (params.size() > y.dim()) throw Error(ErrorKind::PreconditionViolation, "more parameters than the dimension");
    return SmoothVariety::trusted(iz, y.dim() - params.size(), false);
}

ContactCover maximalContact(const SmoothVariety& y, const Ideal& i, const std::vector<Ideal>& componentPrimes) {
    DerivativeTower tower(y, i);
    return maximalContact(tower, componentPrimes);
}

ContactCover maximalContact(DerivativeTower& tower, const std::vector<Ideal>& componentPrimes) {
    const SmoothVariety& y = tower.variety();
    const Ring& ring = y.ring();
    auto b = tower.maxOrder();
    if (!b || *b == 0) throw Error(ErrorKind::PreconditionViolation, "maximalContact needs 0 < max-ord < infinity");

    std::vector<Polynomial> hs;
    for (const auto& h : tower.level(*b - 1).generators())
        if (!y.ideal().contains(h)) hs.push_back(h);
    std::stable_sort(hs.begin(), hs.end(), [](const Polynomial& a, const Polynomial& c) {
        if (a.totalDegree() != c.totalDegree()) return a.totalDegree() < c.totalDegree();
        return a.terms().size() < c.terms().size();
    });
    for (const auto& h : hs)
        if (isSmoothHypersurface(y, h)) return {{{Polynomial::constant(ring, 1), h}}, *b};

    std::vector<Polynomial> idempotents{Polynomial::constant(ring, 1)};
    if (!componentPrimes.empty()) idempotents = orthogonalIdempotents(y, componentPrimes);

    std::vector<ContactEntry> raw;
    for (const auto& m : y.minorCover()) {
        for (const auto& e : idempotents) {
            checkDeadline();
            const Polynomial he = m.h * e;
            SmoothVariety loc = localize(y, he);
            if (loc.isEmpty()) continue;
            const Ring& lr = loc.ring();
            auto zeroHere = [&](const Polynomial& f) { return loc.ideal().contains(widen(f, lr)); };

            std::vector<Candidate> cands;
            for (std::size_t i = 0; i < hs.size(); ++i)
                for (std::size_t k = 0; k < m.derivations.size(); ++k) {
                    Polynomial d = m.apply(k, hs[i]);
                    if (!zeroHere(d)) cands.push_back({d, i, true});
                }
            for (std::size_t i = 0; i < hs.size(); ++i)
                if (!zeroHere(hs[i])) cands.push_back({hs[i], i, false});

            auto unitWith = [&](const std::vector<std::size_t>& pick) {
                std::vector<Polynomial> g = loc.ideal().generators();
                for (auto s : pick) g.push_back(widen(cands[s].value, lr));
                return Ideal(lr, std::move(g)).isUnit();
            };
            std::vector<std::size_t> sel;
            bool covered = false;
            for (std::size_t c = 0; c < cands.size() && !covered; ++c) {
                sel.push_back(c);
                covered = unitWith(sel);
            }
            if (!covered) throw Error(ErrorKind::InvariantViolation, "derivatives of order b-1 do not cover a chart");
            for (std::size_t k = sel.size(); k-- > 0 && sel.size() > 1;) {
                auto trial = sel;
                trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
                if (unitWith(trial)) sel = std::move(trial);
            }

            // sel is minimal, so every member has a nonzero coefficient in any
            // expression of 1 and its piece is needed.
            for (std::size_t k = 0; k < sel.size(); ++k) {
                const Candidate& c = cands[sel[k]];
                if (!c.derivative) {
                    raw.push_back({he * hs[c.source], Polynomial::constant(ring, 1)});
                    continue;
                }
                Polynomial g = he * c.value;
                SmoothVariety piece = localize(y, g);
                std::vector<Polynomial> test = piece.ideal().generators();
                for (const auto& h : hs) test.push_back(widen(h, piece.ring()));
                bool meets = !Ideal(piece.ring(), std::move(test)).isUnit();
                raw.push_back({g, meets ? hs[c.source] : Polynomial::constant(ring, 1)});
            }
        }
    }
    return finish(y, y, std::move(raw), *b);
}

ContactCover liftMaximalContact(const SmoothVariety& y, const std::vector<Polynomial>& priorParams, const Ideal& iz) {
    DerivativeTower tower(subvariety(y, priorParams), iz);
    return liftMaximalContact(y, priorParams, tower);
}

ContactCover liftMaximalContact(const SmoothVariety& y, const std::vector<Polynomial>& priorParams,
                                DerivativeTower& towerOnZ) {
    const SmoothVariety& z = towerOnZ.variety();
    if (z.isEmpty()) throw Error(ErrorKind::PreconditionViolation, "liftMaximalContact on an empty subvariety");
    ContactCover mc = maximalContact(towerOnZ);
    std::vector<ContactEntry> raw = mc.entries;
    for (const auto& h : priorParams)
        if (!y.ideal().contains(h)) raw.push_back({h, Polynomial::constant(y.ring(), 1)});
    return finish(z, y, std::move(raw), mc.order);
}

} // namespace wres
