#pragma once

// Classical Dempster-Shafer belief and plausibility over an exclusive frame.
// Kept separate from the D-number measures so the two can be checked against
// each other.

#include <span>

#include "dnum/dnumber.hpp"

namespace dnum::dst {

/// Bel_m(A) = sum of m(B) over B subset of A.
double belief(std::span<const FocalElement> bpa, Subset a);

/// Pl_m(A) = sum of m(B) over B intersecting A.
double plausibility(std::span<const FocalElement> bpa, Subset a);

}  // namespace dnum::dst
