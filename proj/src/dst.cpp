#include "dnum/dst.hpp"

#include <numeric>

namespace dnum::dst {

double belief(std::span<const FocalElement> bpa, Subset a) {
  return std::accumulate(bpa.begin(), bpa.end(), 0.0, [a](double acc, const FocalElement& e) {
    return (e.set.mask & ~a.mask) == 0 ? acc + e.mass : acc;
  });
}

double plausibility(std::span<const FocalElement> bpa, Subset a) {
  return std::accumulate(bpa.begin(), bpa.end(), 0.0, [a](double acc, const FocalElement& e) {
    return (e.set.mask & a.mask) != 0 ? acc + e.mass : acc;
  });
}

}  // namespace dnum::dst
