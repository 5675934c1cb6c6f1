#include "dnum/dnumber.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dnum {

BeliefInterval::BeliefInterval(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!(lower >= -kMassTolerance && upper <= 1.0 + kMassTolerance && lower <= upper + kMassTolerance)) {
    throw DNumberError("malformed belief interval [" + std::to_string(lower) + ", " +
                       std::to_string(upper) + "]");
  }
}

DNumber::DNumber(std::shared_ptr<const Frame> frame, std::vector<FocalElement> entries)
    : frame_(std::move(frame)) {
  if (!frame_) throw DNumberError("D number needs a frame");
  for (const auto& e : entries) {
    if (!(e.mass >= 0.0) || !std::isfinite(e.mass)) {
      throw DNumberError("mass " + std::to_string(e.mass) + " on " + frame_->describe(e.set) +
                         " must be a finite nonnegative number");
    }
    if (e.set.empty()) {
      if (e.mass > 0.0) throw DNumberError("D(empty set) must be 0");
      continue;
    }
    if (!frame_->owns(e.set)) throw DNumberError("focal set lies outside the frame");
  }
  std::sort(entries.begin(), entries.end(),
            [](const FocalElement& a, const FocalElement& b) { return a.set < b.set; });
  for (const auto& e : entries) {
    if (e.mass == 0.0) continue;
    if (!focal_.empty() && focal_.back().set == e.set) {
      focal_.back().mass += e.mass;
    } else {
      focal_.push_back(e);
    }
  }
  for (const auto& e : focal_) total_ += e.mass;
  if (total_ > 1.0 + kMassTolerance) {
    throw DNumberError("total mass " + std::to_string(total_) + " exceeds 1");
  }
  completed_ = std::abs(total_ - 1.0) <= kMassTolerance;
}

double DNumber::mass(Subset s) const {
  auto it = std::lower_bound(focal_.begin(), focal_.end(), s,
                             [](const FocalElement& e, Subset key) { return e.set < key; });
  return it != focal_.end() && it->set == s ? it->mass : 0.0;
}

DNumber build_dnumber(std::shared_ptr<const Frame> frame, std::vector<FocalElement> entries) {
  return DNumber(std::move(frame), std::move(entries));
}

DNumber vacuous(std::shared_ptr<const Frame> frame) {
  const Subset all = frame->universe();
  return DNumber(std::move(frame), {{all, 1.0}});
}

DNumber complete(const DNumber& d) {
  if (d.completed()) return d;
  std::vector<FocalElement> entries(d.focal_elements().begin(), d.focal_elements().end());
  entries.push_back({d.frame().unknown(), 1.0 - d.total_mass()});
  return DNumber(d.frame_ptr(), std::move(entries));
}

namespace {

void require_measurable(const DNumber& d, Subset a) {
  if (!d.completed()) throw DNumberError("belief measures need a completed D number; call complete() first");
  if (!d.frame().owns(a)) throw DNumberError("proposition lies outside the frame");
}

}  // namespace

double bel(const DNumber& d, Subset a) {
  require_measurable(d, a);
  double sum = 0.0;
  for (const auto& e : d.focal_elements())
    if (e.set.is_subset_of(a)) sum += e.mass;
  return sum;
}

double pl(const DNumber& d, Subset a) {
  require_measurable(d, a);
  if (a.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& e : d.focal_elements()) sum += nonexclusivity(d.frame(), e.set, a) * e.mass;
  return sum;
}

BeliefInterval belief_interval(const DNumber& d, Subset a) { return {bel(d, a), pl(d, a)}; }

bool is_bpa(const DNumber& d) {
  if (!d.completed() || !d.frame().is_exclusive()) return false;
  return std::none_of(d.focal_elements().begin(), d.focal_elements().end(),
                      [&](const FocalElement& e) { return e.set.intersects(d.frame().unknown()); });
}

}  // namespace dnum
