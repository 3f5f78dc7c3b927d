#include "wres/center/center.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "wres/budget.hpp"
#include "wres/error.hpp"

namespace wres {

std::strong_ordering compareInvariant(const Invariant& a, const Invariant& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        int c = cmp(a[k], b[k]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    if (a.size() == b.size()) return std::strong_ordering::equal;
    return a.size() < b.size() ? std::strong_ordering::greater : std::strong_ordering::less;
}

Invariant bToA(const std::vector<unsigned long>& b) {
    Invariant out;
    mpz_class scale = 1;
    for (std::size_t k = 0; k < b.size(); ++k) {
        if (b[k] == 0) throw Error(ErrorKind::PreconditionViolation, "bToA needs positive entries");
        Rational a(mpz_class(b[k]), scale);
        a.canonicalize();
        out.push_back(a);
        if (k + 1 < b.size()) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), b[k] - 1);
            scale *= f;
        }
    }
    return out;
}

std::vector<unsigned long> reducedCenterWeights(const Invariant& maxinv) {
    mpz_class d = 1;
    for (const auto& a : maxinv) {
        if (sgn(a) <= 0) throw Error(ErrorKind::PreconditionViolation, "center weights need positive entries");
        d *= a.get_den();
    }
    std::vector<mpz_class> da;
    mpz_class l = 1;
    for (const auto& a : maxinv) {
        da.push_back(d / a.get_den() * a.get_num());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), da.back().get_mpz_t());
    }
    std::vector<unsigned long> w;
    for (const auto& x : da) {
        mpz_class q = l / x;
        if (!q.fits_ulong_p()) throw Error(ErrorKind::WorkLimit, "center weight exceeds machine range");
        w.push_back(q.get_ui());
    }
    return w;
}

std::string invariantToString(const Invariant& inv) {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < inv.size(); ++k) os << (k ? ", " : "") << rationalToString(inv[k]);
    os << ')';
    return os.str();
}

namespace {

// Generators of (J + base) with the part inside base stripped off.
std::vector<Polynomial> modulo(std::vector<Polynomial> gens, const Ideal& base) {
    gens.insert(gens.end(), base.generators().begin(), base.generators().end());
    Ideal all(base.ring(), std::move(gens));
    std::vector<Polynomial> out;
    Ideal canon = all.canonical();
    for (const auto& g : canon.generators()) {
        Polynomial r = base.reduce(g);
        if (!r.isZero()) out.push_back(r);
    }
    return out;
}

std::vector<Polynomial> multiply(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b, const Ideal& base,
                                 std::size_t workLimit) {
    std::vector<Polynomial> prods;
    std::size_t terms = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = (&a == &b ? i : 0); j < b.size(); ++j) {
            checkDeadline();
            prods.push_back(a[i] * b[j]);
            terms += prods.back().size();
            if (terms > workLimit)
                throw Error(ErrorKind::WorkLimit, "coefficient ideal power exceeds " + std::to_string(workLimit) +
                                                      " intermediate terms");
        }
    return modulo(std::move(prods), base);
}

bool isUnitList(const std::vector<Polynomial>& g) { return g.size() == 1 && g[0].isConstant(); }

std::vector<Polynomial> powerModulo(std::vector<Polynomial> gens, const mpz_class& n, const Ideal& base,
                                    std::size_t workLimit) {
    if (n == 0 || isUnitList(gens)) return {Polynomial::constant(base.ring(), 1)};
    if (gens.empty()) return {};
    if (!n.fits_ulong_p())
        throw Error(ErrorKind::WorkLimit, "coefficient ideal exponent " + n.get_str() + " is out of range");
    unsigned long e = n.get_ui();
    std::vector<Polynomial> result;
    bool have = false;
    while (e) {
        if (e & 1) {
            result = have ? multiply(result, gens, base, workLimit) : gens;
            have = true;
        }
        e >>= 1;
        if (e) gens = multiply(gens, gens, base, workLimit);
        if (have && result.empty()) break;
    }
    return result;
}

} // namespace

Ideal coefficientIdeal(DerivativeTower& tower, std::size_t b, const Ideal& restrictTo, std::size_t workLimit) {
    if (b == 0) throw Error(ErrorKind::PreconditionViolation, "coefficient ideal needs b >= 1");
    const Ring& target = restrictTo.ring();
    mpz_class bf;
    mpz_fac_ui(bf.get_mpz_t(), b);
    std::vector<Polynomial> sum;
    for (std::size_t i = 0; i < b; ++i) {
        std::vector<Polynomial> gens;
        for (const auto& g : tower.level(i).generators()) {
            Polynomial r = restrictTo.reduce(widen(g, target));
            if (!r.isZero()) gens.push_back(r);
        }
        if (gens.empty()) continue;
        gens = modulo(std::move(gens), restrictTo);
        mpz_class e = bf / static_cast<unsigned long>(b - i);
        auto part = powerModulo(std::move(gens), e, restrictTo, workLimit);
        sum.insert(sum.end(), part.begin(), part.end());
        if (isUnitList(part)) break;
    }
    sum.insert(sum.end(), restrictTo.generators().begin(), restrictTo.generators().end());
    return Ideal(target, std::move(sum)).canonical();
}

Ideal coefficientIdeal(const SmoothVariety& z, const Ideal& i, std::size_t b, std::size_t workLimit) {
    DerivativeTower tower(z, i);
    return coefficientIdeal(tower, b, z.ideal(), workLimit);
}

namespace {

struct Contender {
    ChartPiece piece;
    Ideal iz;
    std::vector<Polynomial> params;
};

ChartPiece restrictPiece(const ChartPiece& p, const Polynomial& g) {
    SmoothVariety v = localize(p.variety, g);
    if (v.ring() == p.variety.ring()) return p;
    std::vector<Polynomial> gens;
    for (const auto& f : p.ideal.generators()) gens.push_back(widen(f, v.ring()));
    return {v, Ideal(v.ring(), std::move(gens)), p.origin};
}

} // namespace

CenterData prepareCenter(const std::vector<ChartInput>& charts, const CenterOptions& options) {
    CenterData out;
    std::vector<Contender> contenders;
    std::size_t maxDim = 0;
    for (std::size_t k = 0; k < charts.size(); ++k) {
        requireSameRing(charts[k].variety.ring(), charts[k].ideal.ring(), "prepareCenter");
        if (charts[k].variety.isEmpty()) continue;
        contenders.push_back({{charts[k].variety, charts[k].ideal, k}, charts[k].ideal, {}});
        maxDim = std::max(maxDim, charts[k].variety.dim());
    }
    if (contenders.empty()) throw Error(ErrorKind::PreconditionViolation, "prepareCenter needs a nonempty chart");

    for (std::size_t round = 0;; ++round) {
        if (round > maxDim)
            throw Error(ErrorKind::NonterminationGuard, "competition exceeded " + std::to_string(maxDim) + " rounds");
        std::vector<DerivativeTower> towers;
        std::vector<std::optional<std::size_t>> orders;
        bool infinite = false;
        std::size_t bmax = 0;
        for (const auto& c : contenders) {
            checkDeadline();
            towers.emplace_back(subvariety(c.piece.variety, c.params), c.iz);
            orders.push_back(towers.back().maxOrder());
            if (!orders.back()) infinite = true;
            else bmax = std::max(bmax, *orders.back());
        }
        if (!infinite && bmax == 0) throw Error(ErrorKind::PreconditionViolation, "the ideal is the unit ideal on every chart");

        std::vector<std::size_t> survivors;
        for (std::size_t k = 0; k < contenders.size(); ++k) {
            bool top = infinite ? !orders[k] : (orders[k] && *orders[k] == bmax);
            if (top) survivors.push_back(k);
            else out.losers.push_back(contenders[k].piece);
        }
        if (infinite) {
            for (auto k : survivors) out.winners.push_back({contenders[k].piece, contenders[k].params});
            break;
        }
        out.bInvariant.push_back(bmax);

        std::vector<Contender> next;
        for (auto k : survivors) {
            const Contender& c = contenders[k];
            ContactCover lifted = liftMaximalContact(c.piece.variety, c.params, towers[k]);
            for (const auto& e : lifted.entries) {
                ChartPiece piece = restrictPiece(c.piece, e.g);
                if (e.f.isOne()) {
                    out.losers.push_back(std::move(piece));
                    continue;
                }
                const Ring& r = piece.variety.ring();
                std::vector<Polynomial> params;
                for (const auto& p : c.params) params.push_back(widen(p, r));
                params.push_back(widen(e.f, r));
                Ideal restrictTo = piece.variety.ideal().plus(params);
                Ideal iz = coefficientIdeal(towers[k], bmax, restrictTo, options.workLimit);
                next.push_back({std::move(piece), std::move(iz), std::move(params)});
            }
        }
        contenders = std::move(next);
    }
    out.maxinv = bToA(out.bInvariant);
    return out;
}

} // namespace wres
