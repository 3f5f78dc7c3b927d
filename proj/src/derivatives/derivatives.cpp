#include "wres/derivatives/derivatives.hpp"

#include "wres/budget.hpp"
#include "wres/error.hpp"

namespace wres {

namespace {

Ideal diffOnce(const SmoothVariety& y, const Ideal& i) {
    requireSameRing(y.ring(), i.ring(), "diff");
    const Ring& ring = y.ring();
    Ideal base = i.plus(y.ideal());
    if (base.isUnit()) return Ideal::unit(ring);
    const std::vector<Polynomial> gens = base.canonical().generators();
    Ideal acc;
    bool have = false;
    for (const auto& m : y.minorCover()) {
        std::vector<Polynomial> im = y.ideal().generators();
        im.insert(im.end(), gens.begin(), gens.end());
        for (std::size_t k = 0; k < m.derivations.size(); ++k)
            for (const auto& g : gens) im.push_back(m.apply(k, g));
        Ideal piece(ring, std::move(im));
        if (!m.hInvertible) piece = saturate(piece, m.h);
        if (!have || acc.isUnit()) acc = piece;
        else if (!piece.isUnit()) acc = intersect(acc, piece);
        have = true;
        checkDeadline();
    }
    return acc.canonical();
}

} // namespace

DerivativeResult diff(const SmoothVariety& y, const Ideal& i) { return {diffOnce(y, i), 1}; }

DerivativeResult diffIterated(const SmoothVariety& y, const Ideal& i, std::size_t n) {
    DerivativeTower t(y, i);
    return {t.level(n), n};
}

std::optional<std::size_t> maximalOrderOfVanishing(const SmoothVariety& y, const Ideal& i) {
    return DerivativeTower(y, i).maxOrder();
}

Ideal bSingularLocus(const SmoothVariety& y, const Ideal& i, std::size_t b) {
    return DerivativeTower(y, i).bSingularLocus(b);
}

DerivativeTower::DerivativeTower(SmoothVariety y, const Ideal& i) : y_(std::move(y)) {
    requireSameRing(y_.ring(), i.ring(), "DerivativeTower");
    levels_.push_back(i.plus(y_.ideal()).canonical());
}

const Ideal& DerivativeTower::level(std::size_t k) {
    while (levels_.size() <= k) {
        const Ideal& last = levels_.back();
        levels_.push_back(last.isUnit() ? last : diffOnce(y_, last));
    }
    return levels_[k];
}

std::optional<std::size_t> DerivativeTower::maxOrder() {
    if (maxOrd_) return *maxOrd_;
    // I + I_Y already holds I_Y, so the component test needs only the I part.
    if (vanishesOnComponent(y_, levels_.front())) {
        maxOrd_.emplace(std::nullopt);
        return std::nullopt;
    }
    std::size_t b = 0;
    while (!level(b).isUnit()) {
        ++b;
        checkDeadline();
    }
    maxOrd_.emplace(b);
    return b;
}

const Ideal& DerivativeTower::bSingularLocus(std::size_t b) {
    if (b == 0) throw Error(ErrorKind::PreconditionViolation, "bSingularLocus needs b >= 1");
    return level(b - 1);
}

} // namespace wres
