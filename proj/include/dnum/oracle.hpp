#pragma once

// Brute-force reference evaluation, seeded instance generation and
// executable checks of the measure's properties on small frames.

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dnum/dnumber.hpp"

namespace dnum::oracle {

/// Largest frame the enumeration routines accept (2^7 subsets with X).
inline constexpr std::size_t kMaxEnumeratedFrame = 6;

/// u(A, B) by scanning every singleton pair of the frame.
double nonexclusivity_by_enumeration(const Frame& frame, Subset a, Subset b);

/// Bel and Pl evaluated literally: Bel sums D over every subset of A, Pl
/// walks the whole power set of Theta u {X} and applies the intersecting /
/// disjoint branches separately.
BeliefInterval oracle_bel_pl(const DNumber& d, Subset a);

enum class Completeness { complete, incomplete, random };
enum class Exclusivity { exclusive, random_degrees };

struct GeneratorConfig {
  std::size_t frame_size = 3;
  std::size_t focal_count = 1;
  Completeness completeness = Completeness::random;
  Exclusivity exclusivity = Exclusivity::exclusive;
  std::uint64_t seed = 0;
};

/// Throws DNumberError on frame sizes outside [1, 6] or focal_count outside
/// [1, 2^N - 1].
void validate(const GeneratorConfig& config);

/// Seed for trial `index` of a run seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index);

/// Frame labelled a, b, c, ...; random degrees (X row included) when asked.
std::shared_ptr<const Frame> generate_frame(std::size_t frame_size, Exclusivity exclusivity, std::uint64_t seed);

/// Random D number before completion: distinct focal sets over Theta with
/// flat-Dirichlet masses, scaled below one when incomplete.
DNumber generate_raw(const GeneratorConfig& config);

/// generate_raw followed by complete().
DNumber generate(const GeneratorConfig& config);

/// (1 - w) d + w * vacuous. Every belief interval of d is nested in the
/// intervals of the mixture.
DNumber mix_with_vacuous(const DNumber& d, double weight);

/// The Bel/Pl implementation a check exercises. Defaults to the library's;
/// tests swap in mutants to confirm the checks notice.
struct MeasureImpl {
  std::string name;
  std::function<double(const DNumber&, Subset)> bel;
  std::function<double(const DNumber&, Subset)> pl;

  BeliefInterval interval(const DNumber& d, Subset a) const { return {bel(d, a), pl(d, a)}; }
  double ku(const DNumber& d) const;
  double uu_coefficient(const DNumber& d) const { return pl(d, d.frame().unknown()); }
};

MeasureImpl library_measures();
/// Pl keeping only focal sets that intersect A (non-exclusive branch dropped).
MeasureImpl mutant_pl_without_disjoint_branch();
/// Pl with the u(B, A) factor removed, i.e. every focal set counted fully.
MeasureImpl mutant_pl_ignoring_degrees();

struct CheckReport {
  explicit CheckReport(std::string name = {}) : property(std::move(name)) {}

  std::string property;
  std::size_t trials = 0;
  /// Serialized counterexample documents.
  std::vector<std::string> failures;
  double max_violation = 0.0;
  /// Documented observations that are not failures.
  std::vector<std::string> notes;

  bool passed() const { return failures.empty(); }
  void merge(CheckReport other);
};

/// 0 <= KU <= N and 0 <= Pl(X) <= 1. Each trial draws its focal count
/// uniformly from [1, config.focal_count].
CheckReport check_range(std::size_t trials, const GeneratorConfig& config,
                        const MeasureImpl& impl = library_measures());

/// Checks KU and Pl(X) ordering for one pair, if every interval of `inner` is
/// nested in the matching interval of `outer`. Returns false when the pair
/// is not nested (nothing asserted).
bool check_monotone_pair(const DNumber& inner, const DNumber& outer, const MeasureImpl& impl, CheckReport& report);

/// Runs until `accepted_pairs` nested pairs were checked. Pairs are built by
/// mixing one generated D number with the vacuous one at two weights.
CheckReport check_monotonicity(std::size_t accepted_pairs, const GeneratorConfig& config,
                               const MeasureImpl& impl = library_measures());

/// For every A subset of Theta: D(A) = 1 must give KU = |A| + sum of u({theta}, A)
/// over theta outside A when |A| >= 2. For |A| = 1 the KU formula gives the sum
/// alone; that value is recorded as a note and checked against the sum.
CheckReport check_set_consistency(const std::shared_ptr<const Frame>& frame,
                                  const MeasureImpl& impl = library_measures());

/// Random classical BPAs: the checked Bel/Pl, the enumeration oracle, the
/// classical routines and both KU routes must agree within 1e-12.
CheckReport check_degeneration(std::size_t trials, std::size_t frame_size, std::uint64_t seed,
                               const MeasureImpl& impl = library_measures());

/// Every nonempty A of every generated instance: checked interval equals
/// oracle_bel_pl within 1e-12.
CheckReport check_oracle_equivalence(std::size_t trials, const GeneratorConfig& config,
                                     const MeasureImpl& impl = library_measures());

}  // namespace dnum::oracle
