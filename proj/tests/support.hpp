#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dnum/dnumber.hpp"

namespace dnum::testing {

inline std::shared_ptr<const Frame> make_frame(std::vector<std::string> labels,
                                               std::vector<DegreeSpec> degrees = {},
                                               std::optional<int> cardinality = std::nullopt) {
  return std::make_shared<const Frame>(std::move(labels), cardinality, degrees);
}

// D number from label lists, e.g. {{{"a"}, 0.3}, {{"a", "b"}, 0.5}}.
inline DNumber make_dnumber(const std::shared_ptr<const Frame>& frame,
                            const std::vector<std::pair<std::vector<std::string>, double>>& masses) {
  std::vector<FocalElement> entries;
  for (const auto& [labels, mass] : masses) entries.push_back({frame->subset(labels), mass});
  return DNumber(frame, std::move(entries));
}

}  // namespace dnum::testing
