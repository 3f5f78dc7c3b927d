#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wres/smooth/smooth.hpp"

namespace wres {

struct DerivativeResult {
    Ideal ideal;  // ambient presentation, always containing I and I_Y
    std::size_t order = 0;
};

DerivativeResult diff(const SmoothVariety& y, const Ideal& i);
DerivativeResult diffIterated(const SmoothVariety& y, const Ideal& i, std::size_t n);

// max-ord I; nullopt stands for infinity (I vanishes on a component).
std::optional<std::size_t> maximalOrderOfVanishing(const SmoothVariety& y, const Ideal& i);
Ideal bSingularLocus(const SmoothVariety& y, const Ideal& i, std::size_t b);

// The chain I + I_Y, D^{<=1} I, D^{<=2} I, ... computed on demand and cached.
class DerivativeTower {
public:
    DerivativeTower(SmoothVariety y, const Ideal& i);

    const SmoothVariety& variety() const { return y_; }
    const Ideal& level(std::size_t k);
    std::optional<std::size_t> maxOrder();
    const Ideal& bSingularLocus(std::size_t b);

private:
    SmoothVariety y_;
    std::vector<Ideal> levels_;
    std::optional<std::optional<std::size_t>> maxOrd_;
};

} // namespace wres
