#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "wres/algebra/polynomial.hpp"

namespace wres {

namespace detail {
struct IntegerBasis;
}

struct GroebnerBasis {
    Ring ring;
    MonomialOrder order;
    // Reduced, monic, sorted by leading monomial, largest first.
    std::vector<Polynomial> generators;
    bool reduced = true;
    // cofactors[k][j]: generators[k] = sum_j cofactors[k][j] * input[j]
    std::optional<std::vector<std::vector<Polynomial>>> cofactors;
    std::shared_ptr<const detail::IntegerBasis> internal;

    bool isUnit() const { return generators.size() == 1 && generators[0].isConstant() && !generators[0].isZero(); }
    bool isZero() const { return generators.empty(); }
    std::vector<Monomial> leadingMonomials() const;
};

GroebnerBasis groebnerBasis(const Ring& ring, const std::vector<Polynomial>& gens, const MonomialOrder& order,
                            bool withCofactors = false);

// nullopt once the computation has produced more than `work` coefficient-weighted terms.
std::optional<GroebnerBasis> groebnerBasisWithin(const Ring& ring, const std::vector<Polynomial>& gens,
                                                 const MonomialOrder& order, std::size_t work);

Polynomial normalForm(const Polynomial& f, const GroebnerBasis& basis);

// Coefficients c with sum c_i gens_i = target, or nullopt if target is not in the ideal.
std::optional<std::vector<Polynomial>> liftCombination(const Polynomial& target, const std::vector<Polynomial>& gens);

// Dimension of k[x]/(gens); nullopt when the ideal is (1).
std::optional<std::size_t> krullDimension(const Ring& ring, const std::vector<Polynomial>& gens);
std::optional<std::size_t> krullDimension(const GroebnerBasis& degrevlexBasis);

} // namespace wres
