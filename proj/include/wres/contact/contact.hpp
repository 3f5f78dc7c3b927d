#pragma once

#include <vector>

#include "wres/derivatives/derivatives.hpp"

namespace wres {

// On Spec A[g^-1], f is a local maximal contact hypersurface, or f = 1 when the
// piece misses the b-singular locus.
struct ContactEntry {
    Polynomial g;
    Polynomial f;
};

struct ContactCover {
    std::vector<ContactEntry> entries;
    std::size_t order = 0;  // max-ord of the ideal the cover was built for
};

// componentPrimes, when given, are the minimal primes of I_Y; otherwise the
// single idempotent 1 is used.
ContactCover maximalContact(const SmoothVariety& y, const Ideal& i, const std::vector<Ideal>& componentPrimes = {});
ContactCover maximalContact(DerivativeTower& tower, const std::vector<Ideal>& componentPrimes = {});

// Contact data of I_Z on Z = V(priorParams), spread over all of Y.
ContactCover liftMaximalContact(const SmoothVariety& y, const std::vector<Polynomial>& priorParams, const Ideal& iz);
ContactCover liftMaximalContact(const SmoothVariety& y, const std::vector<Polynomial>& priorParams,
                                DerivativeTower& towerOnZ);

// V(params) inside Y, trusted to be smooth of codimension #params.
SmoothVariety subvariety(const SmoothVariety& y, const std::vector<Polynomial>& params);

} // namespace wres
