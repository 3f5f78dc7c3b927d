#pragma once

#include <random>
#include <string>
#include <vector>

#include "helpers.hpp"

namespace testing {

class RandomPolys {
public:
    explicit RandomPolys(unsigned seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    wres::Rational coefficient(long bound, long maxDen) {
        long num = 0;
        while (num == 0) num = integer(-bound, bound);
        wres::Rational q(num, integer(1, maxDen));
        q.canonicalize();
        return q;
    }

    wres::Monomial monomial(std::size_t nvars, unsigned maxDeg) {
        std::vector<wres::Exponent> e(nvars, 0);
        unsigned d = static_cast<unsigned>(integer(0, maxDeg));
        for (unsigned k = 0; k < d; ++k) ++e[static_cast<std::size_t>(integer(0, static_cast<long>(nvars) - 1))];
        return wres::Monomial(e);
    }

    // Up to `terms` terms of total degree <= maxDeg; may be zero.
    wres::Polynomial poly(const wres::Ring& r, unsigned maxDeg, std::size_t terms, long bound = 9, long maxDen = 1) {
        std::vector<wres::Term> ts;
        std::size_t n = static_cast<std::size_t>(integer(1, static_cast<long>(terms)));
        for (std::size_t k = 0; k < n; ++k) ts.push_back({monomial(r->size(), maxDeg), coefficient(bound, maxDen)});
        return wres::Polynomial::fromTerms(r, std::move(ts));
    }

    wres::Polynomial nonconstant(const wres::Ring& r, unsigned maxDeg, std::size_t terms, long bound = 9) {
        for (;;) {
            auto p = poly(r, maxDeg, terms, bound);
            if (!p.isConstant()) return p;
        }
    }

    std::vector<wres::Polynomial> polys(const wres::Ring& r, std::size_t count, unsigned maxDeg, std::size_t terms) {
        std::vector<wres::Polynomial> out;
        for (std::size_t k = 0; k < count; ++k) out.push_back(nonconstant(r, maxDeg, terms));
        return out;
    }

    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline constexpr int kInstances = 200;

} // namespace testing
