#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "wres/algebra/groebner.hpp"

namespace wres {

// A finite generator list standing for the ideal it generates. Copies share
// a thread-safe cache of Groebner bases keyed by monomial order.
class Ideal {
public:
    Ideal() = default;
    explicit Ideal(Ring ring, std::vector<Polynomial> gens = {});

    static Ideal unit(const Ring& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& generators() const { return gens_; }

    const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::degrevlex()) const;

    bool isUnit() const;
    bool isZero() const;
    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& j) const;
    Polynomial reduce(const Polynomial& f) const;

    // Same ideal, generators replaced by the reduced degrevlex basis.
    Ideal canonical() const;
    Ideal plus(const Ideal& o) const;
    Ideal plus(const std::vector<Polynomial>& more) const;
    Ideal times(const Ideal& o) const;

    std::string toString() const;

private:
    struct Cache;
    Ring ring_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

enum class Containment { Equal, FirstInSecond, SecondInFirst, Incomparable };

Containment idealCompare(const Ideal& i, const Ideal& j);
inline bool idealEqual(const Ideal& i, const Ideal& j) { return idealCompare(i, j) == Containment::Equal; }

Ideal idealPower(const Ideal& i, unsigned long n);
Ideal intersect(const Ideal& i, const Ideal& j);
Ideal quotient(const Ideal& i, const Polynomial& g);
Ideal quotient(const Ideal& i, const Ideal& j);
Ideal saturate(const Ideal& i, const Polynomial& g);
Ideal saturate(const Ideal& i, const Ideal& j);

struct Elimination {
    Ideal ideal;  // in the ring of the remaining variables
    std::vector<std::size_t> kept;  // original indices of the remaining variables
};
Elimination eliminate(const Ideal& i, const std::vector<std::size_t>& vars);

struct RingMap {
    Ring source;
    Ring target;
    Ideal targetQuotient;
    std::vector<Polynomial> images;

    static RingMap identity(const Ring& r);
    Polynomial apply(const Polynomial& f) const;
};

Ideal mapImage(const RingMap& phi, const Ideal& i);
Ideal mapPreimage(const RingMap& phi, const Ideal& j);

// Intersection of the saturations (I_k : h_k^inf); the h_k must generate the
// unit ideal modulo `base`.
Ideal glueIdeals(const std::vector<std::pair<Ideal, Polynomial>>& pieces, const Ideal& base);
Ideal glueIdeals(const std::vector<std::pair<Ideal, Polynomial>>& pieces);

} // namespace wres
