#include "dnum/frame.hpp"

#include <algorithm>
#include <unordered_set>

namespace dnum {

std::vector<std::size_t> indices_of(Subset s) {
  std::vector<std::size_t> out;
  out.reserve(s.size());
  for (std::uint64_t m = s.mask; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

Frame::Frame(std::vector<std::string> labels, std::optional<int> unknown_cardinality,
             const std::vector<DegreeSpec>& degrees)
    : labels_(std::move(labels)), unknown_cardinality_(unknown_cardinality) {
  if (labels_.empty()) throw DNumberError("frame must contain at least one element");
  if (labels_.size() > kMaxFrameSize) {
    throw DNumberError("frame has " + std::to_string(labels_.size()) + " elements; at most " +
                       std::to_string(kMaxFrameSize) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw DNumberError("frame labels must be nonempty");
    if (l == kUnknownLabel) throw DNumberError("label \"X\" is reserved for the unknown event");
    if (!seen.insert(l).second) throw DNumberError("duplicate label \"" + l + "\"");
  }
  if (unknown_cardinality_ && *unknown_cardinality_ < 2) {
    throw DNumberError("unknown cardinality |X| must be at least 2, got " +
                       std::to_string(*unknown_cardinality_));
  }

  const std::size_t n = labels_.size() + 1;
  degrees_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) degrees_[i * n + i] = 1.0;

  for (const auto& spec : degrees) {
    auto i = index_of(spec.first);
    auto j = index_of(spec.second);
    if (!i) throw DNumberError("degree references unknown label \"" + spec.first + "\"");
    if (!j) throw DNumberError("degree references unknown label \"" + spec.second + "\"");
    const std::string pair = "(" + spec.first + ", " + spec.second + ")";
    if (!(spec.degree >= 0.0 && spec.degree <= 1.0)) {
      throw DNumberError("degree " + std::to_string(spec.degree) + " for pair " + pair +
                         " is outside [0, 1]");
    }
    if (*i == *j) {
      if (spec.degree != 1.0) throw DNumberError("self-degree for " + pair + " must be 1");
      continue;
    }
    degrees_[*i * n + *j] = spec.degree;
    degrees_[*j * n + *i] = spec.degree;
  }
}

const std::string& Frame::label(std::size_t index) const {
  static const std::string unknown{kUnknownLabel};
  if (index == unknown_index()) return unknown;
  return labels_.at(index);
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  if (label == kUnknownLabel) return unknown_index();
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

double Frame::degree(std::size_t i, std::size_t j) const {
  const std::size_t n = labels_.size() + 1;
  if (i >= n || j >= n) throw DNumberError("element index out of range");
  return degrees_[i * n + j];
}

Subset Frame::subset(const std::vector<std::string>& labels) const {
  Subset s;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) throw DNumberError("unknown label \"" + l + "\"");
    s = s | Subset::singleton(*i);
  }
  return s;
}

bool Frame::is_exclusive() const {
  const std::size_t n = labels_.size() + 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && degrees_[i * n + j] != 0.0) return false;
  return true;
}

std::string Frame::describe(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : indices_of(s)) {
    if (!first) out += ",";
    out += label(i);
    first = false;
  }
  return out + "}";
}

Frame build_frame(std::vector<std::string> labels, std::optional<int> unknown_cardinality,
                  const std::vector<DegreeSpec>& degrees) {
  return Frame(std::move(labels), unknown_cardinality, degrees);
}

double nonexclusivity(const Frame& frame, Subset a, Subset b) {
  if (a.empty() || b.empty()) throw DNumberError("non-exclusive degree is undefined for the empty set");
  if (!frame.owns(a) || !frame.owns(b)) throw DNumberError("subset does not belong to this frame");
  if (a.intersects(b)) return 1.0;
  double best = 0.0;
  for (auto i : indices_of(a))
    for (auto j : indices_of(b)) best = std::max(best, frame.degree(i, j));
  return best;
}

}  // namespace dnum
