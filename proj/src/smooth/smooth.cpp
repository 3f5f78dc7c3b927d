#include "wres/smooth/smooth.hpp"

#include <map>
#include <mutex>

#include "wres/error.hpp"

namespace wres {

namespace {

bool nextCombination(std::vector<std::size_t>& comb, std::size_t n) {
    const std::size_t k = comb.size();
    for (std::size_t i = k; i-- > 0;) {
        if (comb[i] < n - k + i) {
            ++comb[i];
            for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> firstCombination(std::size_t k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    return c;
}

// Calls visit(rows, cols) for every k x k minor position, rows outer, until it returns false.
template <class Visit>
void forEachMinor(std::size_t nrows, std::size_t ncols, std::size_t k, Visit&& visit) {
    if (k > nrows || k > ncols) return;
    auto rows = firstCombination(k);
    do {
        auto cols = firstCombination(k);
        do {
            if (!visit(rows, cols)) return;
        } while (nextCombination(cols, ncols));
    } while (nextCombination(rows, nrows));
}

std::vector<std::vector<Polynomial>> submatrix(const std::vector<std::vector<Polynomial>>& j,
                                               const std::vector<std::size_t>& rows,
                                               const std::vector<std::size_t>& cols) {
    std::vector<std::vector<Polynomial>> m;
    for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto c : cols) row.push_back(j[r][c]);
        m.push_back(std::move(row));
    }
    return m;
}

Polynomial detRec(const std::vector<std::vector<Polynomial>>& m, std::size_t depth, std::uint64_t colMask,
                  std::map<std::uint64_t, Polynomial>& memo, const Ring& ring) {
    const std::size_t n = m.size();
    if (depth == n) return Polynomial::constant(ring, 1);
    auto it = memo.find(colMask);
    if (it != memo.end()) return it->second;
    Polynomial acc(ring);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (colMask >> c & 1) continue;
        if (!m[depth][c].isZero()) {
            Polynomial sub = detRec(m, depth + 1, colMask | (std::uint64_t{1} << c), memo, ring);
            Polynomial term = m[depth][c] * sub;
            acc = sign > 0 ? acc + term : acc - term;
        }
        sign = -sign;
    }
    memo.emplace(colMask, acc);
    return acc;
}

// Checks whether base + polynomials produced lazily generate (1). `produce`
// calls push(p) for each candidate and stops when push returns false.
template <class Produce>
bool coversUnit(const std::vector<Polynomial>& base, const Ring& ring, Produce&& produce) {
    std::vector<Polynomial> gens = base;
    if (Ideal(ring, gens).isUnit()) return true;
    // Partial minor sets can have far harder bases than the full set.
    produce([&](Polynomial p) {
        if (!p.isZero()) gens.push_back(std::move(p));
        return true;
    });
    return Ideal(ring, gens).isUnit();
}

} // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
    if (m.empty()) throw Error(ErrorKind::PreconditionViolation, "determinant of empty matrix needs a ring");
    std::map<std::uint64_t, Polynomial> memo;
    return detRec(m, 0, 0, memo, m[0][0].ring());
}

std::vector<std::vector<Polynomial>> cofactorMatrix(const std::vector<std::vector<Polynomial>>& m) {
    const std::size_t n = m.size();
    const Ring& ring = m[0][0].ring();
    std::vector<std::vector<Polynomial>> c(n, std::vector<Polynomial>(n, Polynomial(ring)));
    if (n == 1) {
        c[0][0] = Polynomial::constant(ring, 1);
        return c;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::vector<Polynomial>> minor;
            for (std::size_t a = 0; a < n; ++a) {
                if (a == i) continue;
                std::vector<Polynomial> row;
                for (std::size_t b = 0; b < n; ++b)
                    if (b != j) row.push_back(m[a][b]);
                minor.push_back(std::move(row));
            }
            Polynomial d = determinant(minor);
            c[i][j] = (i + j) % 2 ? -d : d;
        }
    return c;
}

std::vector<std::vector<Polynomial>> jacobian(const std::vector<Polynomial>& fs) {
    std::vector<std::vector<Polynomial>> j;
    for (const auto& f : fs) {
        std::vector<Polynomial> row;
        for (std::size_t v = 0; v < f.ring()->size(); ++v) row.push_back(f.derivative(v));
        j.push_back(std::move(row));
    }
    return j;
}

Polynomial MinorChart::apply(std::size_t k, const Polynomial& f) const {
    Polynomial acc(f.ring());
    const auto& d = derivations[k];
    for (std::size_t v = 0; v < d.size(); ++v)
        if (!d[v].isZero()) acc += d[v] * f.derivative(v);
    return acc;
}

struct SmoothVariety::Shared {
    std::once_flag once;
    std::vector<MinorChart> cover;
};

SmoothVariety SmoothVariety::affineSpace(const Ring& ring) { return trusted(Ideal(ring), ring->size(), true); }

SmoothVariety SmoothVariety::trusted(const Ideal& iy, std::size_t dim, bool irreducibleCertified) {
    SmoothVariety y;
    y.ideal_ = iy;
    y.dim_ = dim;
    y.irreducible_ = irreducibleCertified;
    y.shared_ = std::make_shared<Shared>();
    return y;
}

SmoothVariety SmoothVariety::make(const Ideal& iy, bool irreducibleCertified) {
    auto dim = krullDimension(iy.groebner());
    if (!dim) throw Error(ErrorKind::PreconditionViolation, "empty variety " + iy.toString());
    const std::size_t c = iy.ring()->size() - *dim;
    const auto& gens = iy.generators();
    auto jac = jacobian(gens);
    const std::size_t n = iy.ring()->size();
    bool covered = coversUnit(gens, iy.ring(), [&](auto&& push) {
        if (c == 0) {
            push(Polynomial::constant(iy.ring(), 1));
            return;
        }
        forEachMinor(gens.size(), n, c, [&](const auto& rows, const auto& cols) {
            return push(determinant(submatrix(jac, rows, cols)));
        });
    });
    if (!covered) throw Error(ErrorKind::NotSmooth, "Jacobian criterion fails for " + iy.toString());
    bool pure = true;
    forEachMinor(gens.size(), n, c + 1, [&](const auto& rows, const auto& cols) {
        pure = iy.contains(determinant(submatrix(jac, rows, cols)));
        return pure;
    });
    if (!pure) throw Error(ErrorKind::NotPureDimensional, "not of pure dimension " + std::to_string(*dim));
    return trusted(iy, *dim, irreducibleCertified);
}

const std::vector<MinorChart>& SmoothVariety::minorCover() const {
    std::call_once(shared_->once, [&] { shared_->cover = jacobianMinorsCover(*this); });
    return shared_->cover;
}

std::vector<MinorChart> jacobianMinorsCover(const SmoothVariety& y) {
    const Ring& ring = y.ring();
    const std::size_t n = ring->size();
    const std::size_t c = y.codim();
    const auto& gens = y.ideal().generators();
    std::vector<MinorChart> out;
    if (c == 0) {
        MinorChart m;
        m.h = Polynomial::constant(ring, 1);
        m.hInvertible = true;
        for (std::size_t v = 0; v < n; ++v) {
            m.freeVars.push_back(v);
            std::vector<Polynomial> d(n, Polynomial(ring));
            d[v] = Polynomial::constant(ring, 1);
            m.derivations.push_back(std::move(d));
        }
        out.push_back(std::move(m));
        return out;
    }
    auto jac = jacobian(gens);
    std::vector<Polynomial> cover = gens;
    bool done = false;
    forEachMinor(gens.size(), n, c, [&](const auto& rows, const auto& cols) {
        auto sub = submatrix(jac, rows, cols);
        Polynomial h = determinant(sub);
        if (h.isZero() || y.ideal().contains(h)) return true;
        MinorChart m;
        m.rows = rows;
        m.cols = cols;
        m.h = h;
        m.hInvertible = y.ideal().plus({h}).isUnit();
        m.cofactors = cofactorMatrix(sub);
        std::vector<char> inCols(n, 0);
        for (auto col : cols) inCols[col] = 1;
        for (std::size_t jp = 0; jp < n; ++jp) {
            if (inCols[jp]) continue;
            std::vector<Polynomial> d(n, Polynomial(ring));
            d[jp] = h;
            for (std::size_t b = 0; b < cols.size(); ++b) {
                Polynomial s(ring);
                for (std::size_t a = 0; a < rows.size(); ++a) s += jac[rows[a]][jp] * m.cofactors[a][b];
                d[cols[b]] -= s;
            }
            m.freeVars.push_back(jp);
            m.derivations.push_back(std::move(d));
        }
        out.push_back(std::move(m));
        cover.push_back(h);
        if (out.back().hInvertible || Ideal(ring, cover).isUnit()) {
            done = true;
            return false;
        }
        return true;
    });
    if (!done) throw Error(ErrorKind::NotSmooth, "no Jacobian minor cover for " + y.ideal().toString());
    return out;
}

bool vanishesOnComponent(const SmoothVariety& y, const Ideal& j) {
    requireSameRing(y.ring(), j.ring(), "vanishesOnComponent");
    if (j.isZero()) return true;
    if (y.ideal().plus(j).isUnit()) return false;
    if (y.irreducibleCertified()) return y.ideal().contains(j);
    // A combination of the generators vanishing on no component settles it cheaply.
    Polynomial g(y.ring());
    for (std::size_t k = 0; k < j.generators().size(); ++k)
        g += j.generators()[k].scaled(Rational(static_cast<long>(k + 1)));
    if (!g.isZero() && y.ideal().contains(saturate(y.ideal(), g))) return false;
    Ideal sat = saturate(y.ideal(), j);
    return !y.ideal().contains(sat);
}

bool isSmoothOfCodim(const Ideal& iy, std::size_t c) {
    if (iy.isUnit()) return true;
    const Ring& ring = iy.ring();
    const std::size_t n = ring->size();
    const auto& gens = iy.generators();
    auto jac = jacobian(gens);
    bool covered = coversUnit(gens, ring, [&](auto&& push) {
        if (c == 0) {
            push(Polynomial::constant(ring, 1));
            return;
        }
        forEachMinor(gens.size(), n, c, [&](const auto& rows, const auto& cols) {
            return push(determinant(submatrix(jac, rows, cols)));
        });
    });
    if (!covered) return false;
    bool pure = true;
    forEachMinor(gens.size(), n, c + 1, [&](const auto& rows, const auto& cols) {
        pure = iy.contains(determinant(submatrix(jac, rows, cols)));
        return pure;
    });
    return pure;
}

bool isSmoothHypersurface(const SmoothVariety& y, const Polynomial& h) {
    const Ring& ring = y.ring();
    requireSameRing(ring, h.ring(), "isSmoothHypersurface");
    std::vector<Polynomial> base = y.ideal().generators();
    base.push_back(h);
    if (Ideal(ring, base).isUnit()) return true;
    if (vanishesOnComponent(y, Ideal(ring, {h}))) return false;
    // (c+1)-minors of the Jacobian of (f, h); those avoiding the h row lie in I_Y.
    const std::size_t c = y.codim();
    const std::size_t n = ring->size();
    const auto& gens = y.ideal().generators();
    auto jac = jacobian(gens);
    std::vector<Polynomial> dh;
    for (std::size_t v = 0; v < n; ++v) dh.push_back(h.derivative(v));
    return coversUnit(base, ring, [&](auto&& push) {
        if (c == 0) {
            for (const auto& d : dh)
                if (!push(d)) return;
            return;
        }
        if (c > gens.size() || c + 1 > n) return;
        auto rows = firstCombination(c);
        do {
            auto cols = firstCombination(c + 1);
            do {
                std::vector<std::vector<Polynomial>> m;
                for (auto r : rows) {
                    std::vector<Polynomial> row;
                    for (auto col : cols) row.push_back(jac[r][col]);
                    m.push_back(std::move(row));
                }
                std::vector<Polynomial> last;
                for (auto col : cols) last.push_back(dh[col]);
                m.push_back(std::move(last));
                if (!push(determinant(m))) return;
            } while (nextCombination(cols, n));
        } while (nextCombination(rows, gens.size()));
    });
}

bool isRegularParameters(const SmoothVariety& y, const std::vector<Polynomial>& params) {
    if (params.empty()) throw Error(ErrorKind::PreconditionViolation, "isRegularParameters: empty parameter list");
    if (params.size() > y.dim()) return false;
    Ideal acc = y.ideal();
    for (std::size_t k = 0; k < params.size(); ++k) {
        SmoothVariety z = k == 0 ? y : SmoothVariety::trusted(acc, y.dim() - k, false);
        Ideal next = acc.plus({params[k]});
        if (next.isUnit()) return false;
        if (!isSmoothHypersurface(z, params[k])) return false;
        acc = next;
    }
    return true;
}

std::vector<Polynomial> orthogonalIdempotents(const SmoothVariety& y, const std::vector<Ideal>& primes) {
    const Ring& ring = y.ring();
    if (primes.size() <= 1) return {Polynomial::constant(ring, 1)};
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        Polynomial e = Polynomial::constant(ring, 1);
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (j == i) continue;
            std::vector<Polynomial> gens = primes[j].generators();
            const std::size_t nj = gens.size();
            gens.insert(gens.end(), primes[i].generators().begin(), primes[i].generators().end());
            auto c = liftCombination(Polynomial::constant(ring, 1), gens);
            if (!c) throw Error(ErrorKind::NotCoprime, "component ideals " + std::to_string(i) + " and " +
                                                           std::to_string(j) + " are not coprime");
            // f lies in p_j and is 1 modulo p_i
            Polynomial f(ring);
            for (std::size_t k = 0; k < nj; ++k) f += (*c)[k] * gens[k];
            e = y.ideal().reduce(e * f);
        }
        out.push_back(e);
    }
    return out;
}

} // namespace wres

namespace wres {

Polynomial widen(const Polynomial& f, const Ring& wider) {
    std::vector<std::size_t> idx(f.ring()->size());
    for (std::size_t v = 0; v < idx.size(); ++v) idx[v] = v;
    return f.relabel(idx, wider);
}

SmoothVariety localize(const SmoothVariety& y, const Polynomial& g) {
    requireSameRing(y.ring(), g.ring(), "localize");
    if (g.isConstant() && !g.isZero()) return y;
    auto names = y.ring()->variables();
    names.push_back(y.ring()->freshName("t"));
    Ring wider = PolyRing::make(names, y.ring()->order());
    std::vector<Polynomial> gens;
    for (const auto& f : y.ideal().generators()) gens.push_back(widen(f, wider));
    gens.push_back(Polynomial::constant(wider, 1) - Polynomial::variable(wider, names.size() - 1) * widen(g, wider));
    return SmoothVariety::trusted(Ideal(wider, std::move(gens)), y.dim(), y.irreducibleCertified());
}

} // namespace wres
