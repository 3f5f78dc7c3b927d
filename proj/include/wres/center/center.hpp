#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "wres/contact/contact.hpp"

namespace wres {

// Lexicographic, with a sequence ranked above each of its extensions; () is the maximum.
using Invariant = std::vector<Rational>;

std::strong_ordering compareInvariant(const Invariant& a, const Invariant& b);
Invariant bToA(const std::vector<unsigned long>& b);
std::vector<unsigned long> reducedCenterWeights(const Invariant& maxinv);
std::string invariantToString(const Invariant& inv);

inline constexpr std::size_t defaultWorkLimit = 100000;

// sum_{i<b} (D^{<=i} I)^{b!/(b-i)} over the tower's variety, restricted to
// V(restrictTo); restrictTo lives in the tower ring or one extending it by
// trailing variables and must contain the tower variety's ideal.
Ideal coefficientIdeal(DerivativeTower& tower, std::size_t b, const Ideal& restrictTo,
                       std::size_t workLimit = defaultWorkLimit);
Ideal coefficientIdeal(const SmoothVariety& z, const Ideal& i, std::size_t b, std::size_t workLimit = defaultWorkLimit);

struct ChartInput {
    SmoothVariety variety;
    Ideal ideal;
};

// A nonempty distinguished open of input chart `origin`, with that chart's
// ideal carried into the open's ring.
struct ChartPiece {
    SmoothVariety variety;
    Ideal ideal;
    std::size_t origin = 0;
};

struct Winner {
    ChartPiece piece;
    std::vector<Polynomial> params;
};

struct CenterData {
    Invariant maxinv;
    std::vector<unsigned long> bInvariant;
    std::vector<Winner> winners;
    std::vector<ChartPiece> losers;
};

struct CenterOptions {
    std::size_t workLimit = defaultWorkLimit;
};

CenterData prepareCenter(const std::vector<ChartInput>& charts, const CenterOptions& options = {});

} // namespace wres
