#pragma once

#include <cstddef>
#include <vector>

#include "wres/smooth/smooth.hpp"

namespace wres {

// mu_order acts on the chart with the given per-variable degrees.
struct Grading {
    std::vector<long> degrees;
    unsigned long order = 1;
};

struct BlowUpChart {
    std::size_t index = 0;  // the chart of parameter `index`
    SmoothVariety variety;  // chart ring and I_W
    Ideal totalTransform;   // phi(I) + I_W
    Ideal transform;        // (totalTransform : u^inf)
    RingMap map;            // from the blown-up variety's ring
    Grading grading;
    std::size_t exceptional = 0;  // index of u

    const Ring& ring() const { return variety.ring(); }
    Polynomial u() const { return Polynomial::variable(ring(), exceptional); }
};

struct BlowUpData {
    Ideal preimage;  // I_phi in k[x, y_1..y_r, u]
    std::vector<BlowUpChart> charts;
};

BlowUpData weightedBlowUpData(const SmoothVariety& y, const Ideal& i, const std::vector<Polynomial>& params,
                              const std::vector<unsigned long>& weights);
std::vector<BlowUpChart> weightedBlowUp(const SmoothVariety& y, const Ideal& i, const std::vector<Polynomial>& params,
                                        const std::vector<unsigned long>& weights);

// (totalTransform : u^aw), a quotient rather than a saturation.
Ideal weakTransform(const BlowUpChart& chart, unsigned long aw);

// First parent, then child.
RingMap chartMapCompose(const RingMap& parent, const RingMap& child);

bool isHomogeneousModulo(const Polynomial& f, const Grading& g);

} // namespace wres
