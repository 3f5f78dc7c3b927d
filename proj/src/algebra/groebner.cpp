#include "wres/algebra/groebner.hpp"

#include <algorithm>

#include "wres/budget.hpp"
#include "wres/error.hpp"

namespace wres {

namespace detail {

struct ITerm {
    Monomial mono;
    Integer coef;
};
using IPoly = std::vector<ITerm>;

struct IntegerBasis {
    MonomialOrder order;
    std::vector<IPoly> polys;
    std::vector<std::vector<Polynomial>> cofs;
};

} // namespace detail

namespace {

using detail::IPoly;
using detail::ITerm;

// P = factor * f, primitive over Z, positive leading coefficient, sorted by ord.
IPoly toIPoly(const Polynomial& f, const MonomialOrder& ord, Rational& factor) {
    IPoly p;
    if (f.isZero()) {
        factor = 1;
        return p;
    }
    Integer num = 0, den = 1;
    for (const auto& t : f.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coef.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coef.get_den_mpz_t());
    }
    factor = Rational(den, num);
    factor.canonicalize();
    p.reserve(f.size());
    for (const auto& t : f.terms()) {
        Rational c = t.coef * factor;
        p.push_back(ITerm{t.mono, c.get_num()});
    }
    if (!(ord == MonomialOrder::degrevlex()))
        std::sort(p.begin(), p.end(), [&](const ITerm& a, const ITerm& b) { return ord.compare(a.mono, b.mono) > 0; });
    if (p.front().coef < 0) {
        factor = -factor;
        for (auto& t : p) t.coef = -t.coef;
    }
    return p;
}

Polynomial fromIPoly(const Ring& ring, const IPoly& p, const Rational& divisor) {
    std::vector<Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) {
        Rational c(t.coef);
        c /= divisor;
        terms.push_back(Term{t.mono, c});
    }
    return Polynomial::fromTerms(ring, std::move(terms));
}

// Exact bookkeeping carried alongside a reduction. `scale` and `cof` evolve
// with every linear combination so the caller's identity keeps holding.
struct Tracker {
    Rational* scale = nullptr;
    std::vector<Polynomial>* cof = nullptr;
    const Ring* ring = nullptr;
};

struct Divisor {
    const IPoly* poly;
    const std::vector<Polynomial>* cof;
};

// Optional deterministic work cap for the calling thread, in produced terms
// weighted by coefficient size.
struct WorkMeter {
    bool on = false;
    std::size_t used = 0;
    std::size_t limit = 0;
};
thread_local WorkMeter tMeter;
struct WorkExceeded {};

void charge(const IPoly& p) {
    if (!tMeter.on) return;
    std::size_t w = 0;
    for (const auto& t : p) w += 1 + mpz_size(t.coef.get_mpz_t());
    tMeter.used += w;
    if (tMeter.used > tMeter.limit) throw WorkExceeded{};
}

// a*m1*P1 - b*m2*P2, both inputs sorted by ord.
IPoly linComb(const Integer& a, const Monomial* m1, const IPoly& p1, const Integer& b, const Monomial& m2,
              const IPoly& p2, std::size_t skip2, const MonomialOrder& ord) {
    IPoly out;
    out.reserve(p1.size() + p2.size());
    const bool aOne = (a == 1);
    std::size_t i = 0, j = skip2;
    Monomial mj;
    bool haveMj = false;
    while (i < p1.size() || j < p2.size()) {
        if (j < p2.size() && !haveMj) {
            mj = p2[j].mono * m2;
            haveMj = true;
        }
        int c;
        if (i == p1.size()) c = -1;
        else if (j == p2.size()) c = 1;
        else {
            if (m1) c = ord.compare(p1[i].mono * *m1, mj);
            else c = ord.compare(p1[i].mono, mj);
        }
        if (c > 0) {
            ITerm t{m1 ? p1[i].mono * *m1 : p1[i].mono, aOne ? p1[i].coef : Integer(a * p1[i].coef)};
            out.push_back(std::move(t));
            ++i;
        } else if (c < 0) {
            out.push_back(ITerm{std::move(mj), -b * p2[j].coef});
            haveMj = false;
            ++j;
        } else {
            Integer s = aOne ? Integer(p1[i].coef - b * p2[j].coef) : Integer(a * p1[i].coef - b * p2[j].coef);
            if (s != 0) out.push_back(ITerm{std::move(mj), std::move(s)});
            haveMj = false;
            ++i;
            ++j;
        }
    }
    charge(out);
    return out;
}

void updateCofactors(Tracker& tr, const Integer& a, const Integer& b, const Monomial& q,
                     const std::vector<Polynomial>* dcof) {
    if (tr.scale) *tr.scale *= a;
    if (tr.cof) {
        auto& c = *tr.cof;
        for (std::size_t k = 0; k < c.size(); ++k) {
            Polynomial left = a == 1 ? c[k] : c[k].scaled(Rational(a));
            if (dcof && !(*dcof)[k].isZero())
                c[k] = left - (*dcof)[k].timesMonomial(q, Rational(b));
            else
                c[k] = std::move(left);
        }
    }
}

void removeContent(IPoly& p, Tracker& tr) {
    if (p.empty()) return;
    Integer g = 0;
    for (const auto& t : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
        if (g == 1) break;
    }
    if (p.front().coef < 0) g = -g;
    if (g == 1) return;
    for (auto& t : p) mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), g.get_mpz_t());
    Rational inv(Integer(1), g);
    inv.canonicalize();
    if (tr.scale) *tr.scale *= inv;
    if (tr.cof)
        for (auto& c : *tr.cof) c = c.scaled(inv);
}

std::size_t weight(const IPoly& p) {
    std::size_t w = 0;
    for (const auto& t : p) w += mpz_size(t.coef.get_mpz_t()) + 1;
    return w;
}

// The divisor with the fewest terms and limbs keeps coefficient growth down.
const Divisor* findDivisor(const Monomial& m, const std::vector<Divisor>& divs) {
    const Divisor* best = nullptr;
    std::size_t bestWeight = 0;
    for (const auto& d : divs) {
        if (!(*d.poly)[0].mono.divides(m)) continue;
        std::size_t w = weight(*d.poly);
        if (!best || w < bestWeight) {
            best = &d;
            bestWeight = w;
        }
    }
    return best;
}

// Full (or top) reduction of p by divs.
void reduce(IPoly& p, const std::vector<Divisor>& divs, const MonomialOrder& ord, bool full, Tracker& tr) {
    std::size_t k = 0;
    unsigned steps = 0;
    while (k < p.size()) {
        const Divisor* d = findDivisor(p[k].mono, divs);
        if (!d) {
            if (!full) break;
            ++k;
            continue;
        }
        const IPoly& g = *d->poly;
        Monomial q = p[k].mono / g[0].mono;
        Integer gc;
        mpz_gcd(gc.get_mpz_t(), p[k].coef.get_mpz_t(), g[0].coef.get_mpz_t());
        Integer a = g[0].coef / gc;
        Integer b = p[k].coef / gc;
        if (a < 0) {
            a = -a;
            b = -b;
        }
        // p[k] cancels exactly against the leading term of q*g.
        IPoly head(std::make_move_iterator(p.begin()), std::make_move_iterator(p.begin() + static_cast<long>(k)));
        IPoly tail(std::make_move_iterator(p.begin() + static_cast<long>(k) + 1), std::make_move_iterator(p.end()));
        if (a != 1)
            for (auto& t : head) t.coef *= a;
        IPoly merged = linComb(a, nullptr, tail, b, q, g, 1, ord);
        head.insert(head.end(), std::make_move_iterator(merged.begin()), std::make_move_iterator(merged.end()));
        p = std::move(head);
        updateCofactors(tr, a, b, q, d->cof);
        checkDeadline();
        if ((++steps & 15u) == 0) removeContent(p, tr);
    }
    removeContent(p, tr);
}

struct Elem {
    IPoly poly;
    std::vector<Polynomial> cof;
};

class Buchberger {
public:
    Buchberger(Ring ring, MonomialOrder ord, bool track) : ring_(std::move(ring)), ord_(ord), track_(track) {}

    // Returns false if a constant (the unit ideal) was found; elems_.back() is then it.
    bool run(const std::vector<Polynomial>& gens) {
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (gens[k].isZero()) continue;
            Rational f;
            Elem e{toIPoly(gens[k], ord_, f), {}};
            if (track_) {
                e.cof.assign(gens.size(), Polynomial(ring_));
                e.cof[k] = Polynomial::constant(ring_, f);
            }
            if (!reduceAndAdd(std::move(e))) return false;
        }
        while (!pairs_.empty()) {
            checkDeadline();
            std::size_t best = 0;
            for (std::size_t p = 1; p < pairs_.size(); ++p) {
                int c = ord_.compare(pairs_[p].lcm, pairs_[best].lcm);
                if (c < 0 || (c == 0 && std::pair(pairs_[p].j, pairs_[p].i) < std::pair(pairs_[best].j, pairs_[best].i)))
                    best = p;
            }
            Pair pr = std::move(pairs_[best]);
            pairs_[best] = std::move(pairs_.back());
            pairs_.pop_back();
            if (!reduceAndAdd(sPolynomial(pr))) return false;
        }
        return true;
    }

    std::vector<std::size_t> activeIndices() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (active_[i]) out.push_back(i);
        return out;
    }

    std::vector<Elem>& elems() { return elems_; }

    std::vector<Divisor> divisors(std::size_t exclude = static_cast<std::size_t>(-1)) const {
        std::vector<Divisor> d;
        for (std::size_t i = 0; i < elems_.size(); ++i)
            if (active_[i] && i != exclude) d.push_back(Divisor{&elems_[i].poly, track_ ? &elems_[i].cof : nullptr});
        return d;
    }

private:
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };

    Elem sPolynomial(const Pair& pr) {
        const Elem& ei = elems_[pr.i];
        const Elem& ej = elems_[pr.j];
        const Monomial& li = ei.poly[0].mono;
        const Monomial& lj = ej.poly[0].mono;
        Integer g;
        mpz_gcd(g.get_mpz_t(), ei.poly[0].coef.get_mpz_t(), ej.poly[0].coef.get_mpz_t());
        Integer a = ej.poly[0].coef / g;
        Integer b = ei.poly[0].coef / g;
        Monomial mi = pr.lcm / li;
        Monomial mj = pr.lcm / lj;
        Elem s;
        IPoly pi(ei.poly.begin() + 1, ei.poly.end());
        s.poly = linComb(a, &mi, pi, b, mj, ej.poly, 1, ord_);
        if (track_) {
            s.cof.resize(ei.cof.size());
            for (std::size_t k = 0; k < s.cof.size(); ++k)
                s.cof[k] = ei.cof[k].timesMonomial(mi, Rational(a)) - ej.cof[k].timesMonomial(mj, Rational(b));
        }
        return s;
    }

    bool reduceAndAdd(Elem e) {
        Tracker tr;
        if (track_) tr.cof = &e.cof;
        reduce(e.poly, divisors(), ord_, true, tr);
        if (e.poly.empty()) return true;
        elems_.push_back(std::move(e));
        active_.push_back(1);
        if (elems_.back().poly[0].mono.isOne()) return false;
        update(elems_.size() - 1);
        return true;
    }

    void update(std::size_t h) {
        const Monomial& lh = elems_[h].poly[0].mono;
        struct Cand {
            std::size_t g;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> c;
        for (std::size_t g = 0; g < h; ++g) {
            if (!active_[g]) continue;
            const Monomial& lg = elems_[g].poly[0].mono;
            c.push_back(Cand{g, lh.lcm(lg), lh.coprime(lg)});
        }
        std::vector<Cand> d;
        for (std::size_t p = 0; p < c.size(); ++p) {
            bool keep = c[p].coprime;
            if (!keep) {
                keep = true;
                for (std::size_t q = p + 1; q < c.size() && keep; ++q)
                    if (c[q].lcm.divides(c[p].lcm)) keep = false;
                for (std::size_t q = 0; q < d.size() && keep; ++q)
                    if (d[q].lcm.divides(c[p].lcm)) keep = false;
            }
            if (keep) d.push_back(c[p]);
        }
        std::vector<Pair> kept;
        kept.reserve(pairs_.size() + d.size());
        for (auto& pr : pairs_) {
            if (lh.divides(pr.lcm)) {
                Monomial l1 = elems_[pr.i].poly[0].mono.lcm(lh);
                Monomial l2 = elems_[pr.j].poly[0].mono.lcm(lh);
                if (!(l1 == pr.lcm) && !(l2 == pr.lcm)) continue;
            }
            kept.push_back(std::move(pr));
        }
        for (auto& cd : d)
            if (!cd.coprime) kept.push_back(Pair{cd.g, h, std::move(cd.lcm)});
        pairs_ = std::move(kept);
        for (std::size_t g = 0; g < h; ++g)
            if (active_[g] && lh.divides(elems_[g].poly[0].mono)) active_[g] = 0;
    }

    Ring ring_;
    MonomialOrder ord_;
    bool track_;
    std::vector<Elem> elems_;
    std::vector<char> active_;
    std::vector<Pair> pairs_;
};

} // namespace

std::vector<Monomial> GroebnerBasis::leadingMonomials() const {
    std::vector<Monomial> out;
    for (const auto& g : generators) out.push_back(g.leadingTerm(order).mono);
    return out;
}

GroebnerBasis groebnerBasis(const Ring& ring, const std::vector<Polynomial>& gens, const MonomialOrder& order,
                            bool withCofactors) {
    for (const auto& g : gens) requireSameRing(ring, g.ring(), "groebnerBasis");
    Buchberger bb(ring, order, withCofactors);
    bool complete = bb.run(gens);

    std::vector<Elem> finals;
    if (!complete) {
        finals.push_back(std::move(bb.elems().back()));
    } else {
        for (std::size_t i : bb.activeIndices()) {
            Elem e = bb.elems()[i];
            Tracker tr;
            if (withCofactors) tr.cof = &e.cof;
            reduce(e.poly, bb.divisors(i), order, true, tr);
            finals.push_back(std::move(e));
        }
        std::sort(finals.begin(), finals.end(),
                  [&](const Elem& a, const Elem& b) { return order.compare(a.poly[0].mono, b.poly[0].mono) > 0; });
    }

    GroebnerBasis out;
    out.ring = ring;
    out.order = order;
    auto internal = std::make_shared<detail::IntegerBasis>();
    internal->order = order;
    if (withCofactors) out.cofactors.emplace();
    for (auto& e : finals) {
        Rational lc(e.poly[0].coef);
        out.generators.push_back(fromIPoly(ring, e.poly, lc));
        if (withCofactors) {
            std::vector<Polynomial> row;
            row.reserve(e.cof.size());
            for (const auto& c : e.cof) row.push_back(c.scaled(1 / lc));
            if (row.empty()) row.assign(gens.size(), Polynomial(ring));
            out.cofactors->push_back(std::move(row));
            internal->cofs.push_back(std::move(e.cof));
        }
        internal->polys.push_back(std::move(e.poly));
    }
    out.internal = std::move(internal);
    return out;
}

std::optional<GroebnerBasis> groebnerBasisWithin(const Ring& ring, const std::vector<Polynomial>& gens,
                                                 const MonomialOrder& order, std::size_t work) {
    const WorkMeter saved = tMeter;
    tMeter = WorkMeter{true, 0, work};
    std::optional<GroebnerBasis> out;
    try {
        out = groebnerBasis(ring, gens, order);
    } catch (const WorkExceeded&) {
    } catch (...) {
        tMeter = saved;
        throw;
    }
    tMeter = saved;
    return out;
}

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis) {
    requireSameRing(f.ring(), basis.ring, "normalForm");
    if (f.isZero() || basis.isZero()) return f;
    if (basis.isUnit()) return Polynomial(f.ring());
    Rational s;
    IPoly p = toIPoly(f, basis.order, s);
    std::vector<Divisor> divs;
    for (const auto& g : basis.internal->polys) divs.push_back(Divisor{&g, nullptr});
    Tracker tr;
    tr.scale = &s;
    reduce(p, divs, basis.order, true, tr);
    return fromIPoly(f.ring(), p, s);
}

std::optional<std::vector<Polynomial>> liftCombination(const Polynomial& target, const std::vector<Polynomial>& gens) {
    const Ring& ring = target.ring();
    for (const auto& g : gens) requireSameRing(ring, g.ring(), "liftCombination");
    std::vector<Polynomial> zero(gens.size(), Polynomial(ring));
    if (target.isZero()) return zero;
    GroebnerBasis gb = groebnerBasis(ring, gens, MonomialOrder::degrevlex(), true);
    if (gb.isZero()) return std::nullopt;
    // Invariant: p = s*target + sum cof_j gens_j.
    Rational s;
    IPoly p = toIPoly(target, gb.order, s);
    std::vector<Polynomial> cof = zero;
    std::vector<Divisor> divs;
    for (std::size_t k = 0; k < gb.internal->polys.size(); ++k)
        divs.push_back(Divisor{&gb.internal->polys[k], &gb.internal->cofs[k]});
    Tracker tr;
    tr.scale = &s;
    tr.cof = &cof;
    reduce(p, divs, gb.order, true, tr);
    if (!p.empty()) return std::nullopt;
    Rational m = -1 / s;
    for (auto& c : cof) c = c.scaled(m);
    return cof;
}

std::optional<std::size_t> krullDimension(const GroebnerBasis& basis) {
    const std::size_t n = basis.ring->size();
    if (basis.isUnit()) return std::nullopt;
    if (n > 64) throw Error(ErrorKind::PreconditionViolation, "krullDimension supports at most 64 variables");
    std::vector<std::uint64_t> supports;
    for (const auto& m : basis.leadingMonomials()) supports.push_back(m.mask());
    std::size_t best = 0;
    auto independent = [&](std::uint64_t s) {
        for (auto sup : supports)
            if ((sup & ~s) == 0) return false;
        return true;
    };
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t s, std::size_t size) -> void {
        if (size + (n - i) <= best) return;
        if (i == n) {
            best = size;
            return;
        }
        std::uint64_t with = s | (std::uint64_t{1} << i);
        if (independent(with)) self(self, i + 1, with, size + 1);
        self(self, i + 1, s, size);
    };
    rec(rec, 0, 0, 0);
    return best;
}

std::optional<std::size_t> krullDimension(const Ring& ring, const std::vector<Polynomial>& gens) {
    return krullDimension(groebnerBasis(ring, gens, MonomialOrder::degrevlex()));
}

} // namespace wres
