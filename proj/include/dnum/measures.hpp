#pragma once

// Total uncertainty of a D number: known uncertainty KU over the frame's
// singletons and unknown uncertainty UU = Pl(X) * U(X).

#include <optional>
#include <string_view>

#include "dnum/dnumber.hpp"

namespace dnum {

/// Functional form used to evaluate U(X). The measure itself leaves U(X)
/// open; `coefficient_only` reports just Pl(X).
enum class UnknownUncertaintyModel {
  coefficient_only,
  unit,              // U(X) = 1
  cardinality,       // U(X) = |X|
  log2_cardinality,  // U(X) = log2 |X|
};

std::string_view to_string(UnknownUncertaintyModel model);
std::optional<UnknownUncertaintyModel> parse_unknown_model(std::string_view name);

struct TotalUncertainty {
  double ku = 0.0;
  /// Pl(X), the coefficient of U(X).
  double uu_coefficient = 0.0;
  /// Pl(X) * U(X), present when a model other than coefficient_only is used.
  std::optional<double> uu_evaluated;

  /// KU + UU; only defined once U(X) has been evaluated.
  std::optional<double> scalar() const {
    if (!uu_evaluated) return std::nullopt;
    return ku + *uu_evaluated;
  }
};

/// Euclidean distance between [lower, upper] and [0, 1]:
/// sqrt(lower^2 + (upper - 1)^2).
double interval_distance_to_unit(const BeliefInterval& interval);

/// Contribution of one singleton to KU: 1 - interval_distance_to_unit.
inline double known_uncertainty_term(const BeliefInterval& interval) {
  return 1.0 - interval_distance_to_unit(interval);
}

/// KU(D) summed over theta_1..theta_N; X never contributes here.
double ku(const DNumber& d);

/// Pl({X}).
double uu_coefficient(const DNumber& d);

TotalUncertainty total_uncertainty(const DNumber& d,
                                   UnknownUncertaintyModel model = UnknownUncertaintyModel::coefficient_only);

/// KU recomputed through the classical Bel_m/Pl_m routines. Only defined for
/// classical BPAs (see is_bpa).
double dst_ku_reference(const DNumber& bpa);

}  // namespace dnum
