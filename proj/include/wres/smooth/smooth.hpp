#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "wres/ideal/ideal.hpp"

namespace wres {

// Minor M of the Jacobian of the presentation together with the derivations
// D_j' = h d/dx_j' - sum (df_i/dx_j') C_ij d/dx_j that span the tangent
// module where h = det M is invertible.
struct MinorChart {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    Polynomial h;
    bool hInvertible = false;  // h is a unit modulo I_Y
    std::vector<std::vector<Polynomial>> cofactors;  // C, indexed like M
    std::vector<std::size_t> freeVars;              // the j' not in cols
    std::vector<std::vector<Polynomial>> derivations;  // per j': coefficient of d/dx_j for every j

    Polynomial apply(std::size_t k, const Polynomial& f) const;
};

// Spec k[x]/I_Y, smooth of pure dimension dim.
class SmoothVariety {
public:
    static SmoothVariety affineSpace(const Ring& ring);
    // Checks smoothness and pure dimension by the Jacobian criterion.
    static SmoothVariety make(const Ideal& iy, bool irreducibleCertified = false);
    // No checks; for presentations produced by smoothness-preserving steps.
    static SmoothVariety trusted(const Ideal& iy, std::size_t dim, bool irreducibleCertified);

    const Ring& ring() const { return ideal_.ring(); }
    const Ideal& ideal() const { return ideal_; }
    std::size_t dim() const { return dim_; }
    std::size_t codim() const { return ring()->size() - dim_; }
    bool irreducibleCertified() const { return irreducible_; }
    bool isEmpty() const { return ideal_.isUnit(); }

    // Greedy cover of Y by the loci where the kept minors are invertible.
    const std::vector<MinorChart>& minorCover() const;

private:
    struct Shared;
    Ideal ideal_;
    std::size_t dim_ = 0;
    bool irreducible_ = false;
    std::shared_ptr<Shared> shared_;
};

std::vector<std::vector<Polynomial>> jacobian(const std::vector<Polynomial>& fs);
std::vector<MinorChart> jacobianMinorsCover(const SmoothVariety& y);

bool vanishesOnComponent(const SmoothVariety& y, const Ideal& j);
bool isSmoothHypersurface(const SmoothVariety& y, const Polynomial& h);
bool isRegularParameters(const SmoothVariety& y, const std::vector<Polynomial>& params);
// Whether k[x]/(iy) is smooth of pure codimension c (Jacobian criterion).
bool isSmoothOfCodim(const Ideal& iy, std::size_t c);

// Spec A[g^-1] as k[x, t]/(I_Y, 1 - t g), t a fresh last variable.
SmoothVariety localize(const SmoothVariety& y, const Polynomial& g);
// f in a ring extending f's ring by trailing variables.
Polynomial widen(const Polynomial& f, const Ring& wider);

std::vector<Polynomial> orthogonalIdempotents(const SmoothVariety& y, const std::vector<Ideal>& componentPrimes);

// Determinant and cofactor matrix by Laplace expansion along the first row.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);
std::vector<std::vector<Polynomial>> cofactorMatrix(const std::vector<std::vector<Polynomial>>& m);

} // namespace wres
