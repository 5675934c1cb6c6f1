#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "dnum/frame.hpp"

namespace dnum {

struct FocalElement {
  Subset set;
  double mass = 0.0;

  friend bool operator==(const FocalElement&, const FocalElement&) = default;
};

/// [Bel(A), Pl(A)]. Construction enforces 0 <= lower <= upper <= 1 up to
/// kMassTolerance.
class BeliefInterval {
 public:
  BeliefInterval(double lower, double upper);

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  bool contains(const BeliefInterval& inner, double tolerance = 0.0) const {
    return lower_ <= inner.lower_ + tolerance && inner.upper_ <= upper_ + tolerance;
  }

 private:
  double lower_;
  double upper_;
};

/// A mass assignment over nonempty subsets of Theta u {X} with total mass
/// at most one. Focal elements are kept in ascending mask order, masses are
/// strictly positive.
class DNumber {
 public:
  /// Validates and normalizes `entries`: duplicate subsets are merged, zero
  /// masses dropped. Throws DNumberError on negative mass, mass on the empty
  /// set, subsets outside the frame or total mass above one.
  DNumber(std::shared_ptr<const Frame> frame, std::vector<FocalElement> entries);

  const Frame& frame() const { return *frame_; }
  const std::shared_ptr<const Frame>& frame_ptr() const { return frame_; }
  std::span<const FocalElement> focal_elements() const { return focal_; }

  /// Mass assigned exactly to `s` (0 for non-focal sets).
  double mass(Subset s) const;
  double total_mass() const { return total_; }

  /// True iff the total mass is 1 within kMassTolerance.
  bool completed() const { return completed_; }

  friend bool operator==(const DNumber& a, const DNumber& b) {
    return *a.frame_ == *b.frame_ && a.focal_ == b.focal_;
  }

 private:
  std::shared_ptr<const Frame> frame_;
  std::vector<FocalElement> focal_;
  double total_ = 0.0;
  bool completed_ = false;
};

DNumber build_dnumber(std::shared_ptr<const Frame> frame, std::vector<FocalElement> entries);

/// All mass on Theta u {X}.
DNumber vacuous(std::shared_ptr<const Frame> frame);

/// Moves the missing mass 1 - total onto {X}. Returns the input unchanged
/// when it is already complete.
DNumber complete(const DNumber& d);

/// Bel(A) = sum of D(B) over B subset of A. Requires a completed D number.
double bel(const DNumber& d, Subset a);

/// Pl(A) = sum over focal B of u(B, A) D(B). Requires a completed D number.
/// Pl of the empty set is 0.
double pl(const DNumber& d, Subset a);

BeliefInterval belief_interval(const DNumber& d, Subset a);

/// True iff d is a classical basic probability assignment: complete, no mass
/// on sets containing X, and an exclusive frame.
bool is_bpa(const DNumber& d);

}  // namespace dnum
