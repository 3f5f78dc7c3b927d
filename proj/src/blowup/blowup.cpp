#include "wres/blowup/blowup.hpp"

#include <algorithm>
#include <optional>

#include "wres/budget.hpp"
#include "wres/error.hpp"

namespace wres {

namespace {

struct Names {
    std::vector<std::string> ys;
    std::string u;
};

Names chartNames(const Ring& r, std::size_t count) {
    Names n;
    std::vector<std::string> taken;
    for (std::size_t j = 0; j < count; ++j) {
        n.ys.push_back(r->freshName("y" + std::to_string(j + 1), taken));
        taken.push_back(n.ys.back());
    }
    n.u = r->freshName("u", taken);
    return n;
}

std::vector<std::string> without(const std::vector<std::string>& names, std::size_t drop) {
    std::vector<std::string> out;
    for (std::size_t k = 0; k < names.size(); ++k)
        if (k != drop) out.push_back(names[k]);
    return out;
}

// The relation v - g with g free of v, if the ideal has one; v is variable `pos` of r.
std::optional<Polynomial> solvedFor(const Ring& r, const std::vector<Polynomial>& gens, std::size_t pos) {
    std::vector<std::string> names{r->variable(pos)};
    std::vector<std::size_t> idx(r->size());
    for (std::size_t k = 0; k < r->size(); ++k) {
        if (k == pos) {
            idx[k] = 0;
            continue;
        }
        idx[k] = names.size();
        names.push_back(r->variable(k));
    }
    Ring rv = PolyRing::make(names, MonomialOrder::eliminating(1));
    std::vector<Polynomial> moved;
    for (const auto& g : gens) moved.push_back(g.relabel(idx, rv));
    GroebnerBasis gb = groebnerBasis(rv, moved, MonomialOrder::eliminating(1));
    const Monomial v = Monomial::variable(rv->size(), 0);
    for (const auto& e : gb.generators) {
        if (!(e.leadingTerm(gb.order).mono == v)) continue;
        Polynomial g = Polynomial::variable(rv, 0) - e;
        std::vector<std::size_t> back(rv->size());
        for (std::size_t k = 0; k < r->size(); ++k) back[idx[k]] = k;
        return g.relabel(back, r);
    }
    return std::nullopt;
}

} // namespace

BlowUpData weightedBlowUpData(const SmoothVariety& y, const Ideal& i, const std::vector<Polynomial>& params,
                              const std::vector<unsigned long>& weights) {
    requireSameRing(y.ring(), i.ring(), "weightedBlowUp");
    if (params.empty() || params.size() != weights.size())
        throw Error(ErrorKind::ArityMismatch, "weightedBlowUp needs as many weights as parameters, at least one");
    if (std::any_of(weights.begin(), weights.end(), [](unsigned long w) { return w == 0; }))
        throw Error(ErrorKind::PreconditionViolation, "weights must be positive");
    for (const auto& p : params) requireSameRing(y.ring(), p.ring(), "weightedBlowUp");
    if (!isRegularParameters(y, params))
        throw Error(ErrorKind::NotRegularParameters, Ideal(y.ring(), params).toString() + " are not regular parameters");

    const Ring& x = y.ring();
    const std::size_t n = x->size(), r = params.size();
    Names nm = chartNames(x, r);

    std::vector<std::string> bigNames = x->variables();
    bigNames.insert(bigNames.end(), nm.ys.begin(), nm.ys.end());
    bigNames.push_back(nm.u);
    Ring big = PolyRing::make(bigNames);
    std::vector<std::string> tNames = x->variables();
    tNames.push_back("@T");
    tNames.push_back(nm.u);
    Ring tr = PolyRing::make(tNames);
    const Polynomial T = Polynomial::variable(tr, n), U = Polynomial::variable(tr, n + 1);

    RingMap phi{big, tr, Ideal(tr), {}};
    for (std::size_t k = 0; k < n; ++k) phi.images.push_back(Polynomial::variable(tr, k));
    for (std::size_t j = 0; j < r; ++j) phi.images.push_back(widen(params[j], tr) * T.pow(weights[j]));
    phi.images.push_back(U);
    std::vector<Polynomial> laurent;
    for (const auto& f : y.ideal().generators()) laurent.push_back(widen(f, tr));
    laurent.push_back(T * U - Polynomial::constant(tr, 1));
    BlowUpData out;
    out.preimage = mapPreimage(phi, Ideal(tr, laurent)).canonical();

    for (std::size_t ci = 0; ci < r; ++ci) {
        checkDeadline();
        // y_ci = 1
        std::vector<std::string> names = without(bigNames, n + ci);
        Ring cur = PolyRing::make(names);
        std::vector<Polynomial> sub;
        for (std::size_t b = 0; b < big->size(); ++b) {
            if (b == n + ci) {
                sub.push_back(Polynomial::constant(cur, 1));
                continue;
            }
            sub.push_back(Polynomial::variable(cur, *cur->indexOf(bigNames[b])));
        }
        std::vector<Polynomial> sigma = sub;
        std::vector<Polynomial> k;
        for (const auto& g : out.preimage.generators()) {
            Polynomial s = g.substitute(sub, cur);
            if (!s.isZero()) k.push_back(s);
        }

        std::vector<std::string> candidates;
        for (std::size_t b = 0; b < n; ++b) candidates.push_back(bigNames[b]);
        for (std::size_t j = 0; j < r; ++j)
            if (j != ci) candidates.push_back(nm.ys[j]);
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& name : candidates) {
                auto pos = cur->indexOf(name);
                if (!pos) continue;
                auto g = solvedFor(cur, k, *pos);
                if (!g) continue;
                Ring next = PolyRing::make(without(cur->variables(), *pos));
                std::vector<Polynomial> step;
                for (std::size_t v = 0; v < cur->size(); ++v) {
                    if (v == *pos) step.push_back(Polynomial(next));
                    else step.push_back(Polynomial::variable(next, *next->indexOf(cur->variable(v))));
                }
                step[*pos] = g->substitute(step, next);
                std::vector<Polynomial> nk;
                for (const auto& f : k) {
                    Polynomial s = f.substitute(step, next);
                    if (!s.isZero()) nk.push_back(s);
                }
                for (auto& s : sigma) s = s.substitute(step, next);
                k = std::move(nk);
                cur = next;
                changed = true;
            }
        }

        BlowUpChart c;
        c.index = ci;
        Ideal iw = Ideal(cur, k).canonical();
        c.variety = SmoothVariety::trusted(iw, y.dim(), y.irreducibleCertified());
        c.map = RingMap{x, cur, iw, std::vector<Polynomial>(sigma.begin(), sigma.begin() + static_cast<std::ptrdiff_t>(n))};
        c.totalTransform = mapImage(c.map, i).plus(iw);
        c.exceptional = *cur->indexOf(nm.u);
        c.transform = saturate(c.totalTransform, c.u()).canonical();
        c.grading.order = weights[ci];
        for (const auto& name : cur->variables()) {
            long d = 0;
            for (std::size_t j = 0; j < r; ++j)
                if (name == nm.ys[j]) d = -static_cast<long>(weights[j]);
            if (name == nm.u) d = 1;
            c.grading.degrees.push_back(d);
        }
        out.charts.push_back(std::move(c));
    }
    return out;
}

std::vector<BlowUpChart> weightedBlowUp(const SmoothVariety& y, const Ideal& i, const std::vector<Polynomial>& params,
                                        const std::vector<unsigned long>& weights) {
    return weightedBlowUpData(y, i, params, weights).charts;
}

Ideal weakTransform(const BlowUpChart& chart, unsigned long aw) {
    if (aw == 0) return chart.totalTransform;
    return quotient(chart.totalTransform, chart.u().pow(aw)).canonical();
}

RingMap chartMapCompose(const RingMap& parent, const RingMap& child) {
    requireSameRing(parent.target, child.source, "chartMapCompose");
    RingMap out{parent.source, child.target, child.targetQuotient, {}};
    for (const auto& im : parent.images) out.images.push_back(im.substitute(child.images, child.target));
    return out;
}

bool isHomogeneousModulo(const Polynomial& f, const Grading& g) {
    if (f.isZero()) return true;
    const long m = static_cast<long>(g.order);
    auto degree = [&](const Monomial& mono) {
        long d = 0;
        for (std::size_t v = 0; v < g.degrees.size(); ++v) d += g.degrees[v] * static_cast<long>(mono[v]);
        return ((d % m) + m) % m;
    };
    const long d0 = degree(f.terms().front().mono);
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const Term& t) { return degree(t.mono) == d0; });
}

} // namespace wres
