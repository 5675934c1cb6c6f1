#include "dnum/measures.hpp"

#include <cmath>

#include "dnum/dst.hpp"

namespace dnum {

std::string_view to_string(UnknownUncertaintyModel model) {
  switch (model) {
    case UnknownUncertaintyModel::coefficient_only: return "coefficient";
    case UnknownUncertaintyModel::unit: return "unit";
    case UnknownUncertaintyModel::cardinality: return "cardinality";
    case UnknownUncertaintyModel::log2_cardinality: return "log2";
  }
  return "coefficient";
}

std::optional<UnknownUncertaintyModel> parse_unknown_model(std::string_view name) {
  if (name == "coefficient") return UnknownUncertaintyModel::coefficient_only;
  if (name == "unit") return UnknownUncertaintyModel::unit;
  if (name == "cardinality") return UnknownUncertaintyModel::cardinality;
  if (name == "log2") return UnknownUncertaintyModel::log2_cardinality;
  return std::nullopt;
}

double interval_distance_to_unit(const BeliefInterval& interval) {
  return std::hypot(interval.lower(), interval.upper() - 1.0);
}

double ku(const DNumber& d) {
  double sum = 0.0;
  for (std::size_t i = 0; i < d.frame().size(); ++i) {
    sum += known_uncertainty_term(belief_interval(d, Subset::singleton(i)));
  }
  return sum;
}

double uu_coefficient(const DNumber& d) { return pl(d, d.frame().unknown()); }

TotalUncertainty total_uncertainty(const DNumber& d, UnknownUncertaintyModel model) {
  TotalUncertainty tu{ku(d), uu_coefficient(d), std::nullopt};
  const auto cardinality = d.frame().unknown_cardinality();
  auto need_cardinality = [&] {
    if (!cardinality) {
      throw DNumberError("U(X) model \"" + std::string(to_string(model)) +
                         "\" needs a known cardinality |X|");
    }
    return static_cast<double>(*cardinality);
  };
  switch (model) {
    case UnknownUncertaintyModel::coefficient_only: break;
    case UnknownUncertaintyModel::unit: tu.uu_evaluated = tu.uu_coefficient; break;
    case UnknownUncertaintyModel::cardinality: tu.uu_evaluated = tu.uu_coefficient * need_cardinality(); break;
    case UnknownUncertaintyModel::log2_cardinality:
      tu.uu_evaluated = tu.uu_coefficient * std::log2(need_cardinality());
      break;
  }
  return tu;
}

double dst_ku_reference(const DNumber& bpa) {
  if (!is_bpa(bpa)) throw DNumberError("dst_ku_reference needs a classical BPA");
  const auto masses = bpa.focal_elements();
  double sum = 0.0;
  for (std::size_t i = 0; i < bpa.frame().size(); ++i) {
    const Subset s = Subset::singleton(i);
    const double lo = dst::belief(masses, s);
    const double up = dst::plausibility(masses, s);
    sum += 1.0 - std::sqrt(lo * lo + (up - 1.0) * (up - 1.0));
  }
  return sum;
}

}  // namespace dnum
