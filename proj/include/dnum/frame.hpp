#pragma once

// Frames of discernment whose elements need not be mutually exclusive,
// plus the distinguished unknown event X.

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dnum {

/// Raised for every contract violation in the library (bad labels, masses
/// out of range, operations on uncompleted D numbers, ...).
class DNumberError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Tolerance for mass-sum and range validation.
inline constexpr double kMassTolerance = 1e-9;
/// Tolerance for agreement between independent evaluation routes.
inline constexpr double kOracleTolerance = 1e-12;

/// Label reserved for the unknown event.
inline constexpr std::string_view kUnknownLabel = "X";

/// Largest supported |Theta|. Index |Theta| is taken by X, so masks fit in 64 bits.
inline constexpr std::size_t kMaxFrameSize = 63;

/// A subset of Theta u {X}, encoded as a bitmask over element indices.
/// Bit i (i < N) is theta_i; bit N is X. Only meaningful relative to one Frame.
struct Subset {
  std::uint64_t mask = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t m) : mask(m) {}

  static constexpr Subset singleton(std::size_t index) { return Subset{std::uint64_t{1} << index}; }

  constexpr bool empty() const { return mask == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask)); }
  constexpr bool contains(std::size_t index) const { return (mask >> index) & 1U; }
  constexpr bool intersects(Subset other) const { return (mask & other.mask) != 0; }
  constexpr bool is_subset_of(Subset other) const { return (mask & ~other.mask) == 0; }

  constexpr Subset operator|(Subset o) const { return Subset{mask | o.mask}; }
  constexpr Subset operator&(Subset o) const { return Subset{mask & o.mask}; }

  friend constexpr auto operator<=>(Subset, Subset) = default;
};

/// Element indices of a subset in ascending order.
std::vector<std::size_t> indices_of(Subset s);

/// A pairwise non-exclusivity specification between two labels.
struct DegreeSpec {
  std::string first;
  std::string second;
  double degree = 0.0;
};

/// An ordered finite set Theta = {theta_1..theta_N}, the unknown event X, and
/// the symmetric matrix of non-exclusive degrees between singletons.
///
/// Frames are immutable after construction; share them through
/// std::shared_ptr<const Frame>.
class Frame {
 public:
  /// Builds a frame. Unlisted pairs default to degree 0 (exclusive);
  /// the diagonal is fixed at 1. `unknown_cardinality` is |X| when known.
  Frame(std::vector<std::string> labels, std::optional<int> unknown_cardinality = std::nullopt,
        const std::vector<DegreeSpec>& degrees = {});

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> unknown_cardinality() const { return unknown_cardinality_; }

  /// Index of X (always equal to size()).
  std::size_t unknown_index() const { return labels_.size(); }

  /// Label of element `index`; index N names X.
  const std::string& label(std::size_t index) const;

  /// Index of a label, accepting "X" for the unknown event.
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Stored degree between two singleton indices (0..N inclusive).
  double degree(std::size_t i, std::size_t j) const;

  Subset theta() const { return Subset{(std::uint64_t{1} << size()) - 1}; }
  Subset unknown() const { return Subset::singleton(unknown_index()); }
  Subset universe() const { return theta() | unknown(); }

  bool owns(Subset s) const { return s.is_subset_of(universe()); }

  /// Subset from labels; throws on unknown labels.
  Subset subset(const std::vector<std::string>& labels) const;

  /// True iff every off-diagonal degree, X rows included, is zero.
  bool is_exclusive() const;

  std::string describe(Subset s) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
  std::optional<int> unknown_cardinality_;
  // Row-major (N+1) x (N+1).
  std::vector<double> degrees_;
};

/// Builds a frame from labels and label-pair degrees; see Frame's constructor.
Frame build_frame(std::vector<std::string> labels, std::optional<int> unknown_cardinality,
                  const std::vector<DegreeSpec>& degrees);

/// Non-exclusive degree u(A, B) between two nonempty subsets: 1 when they
/// intersect, otherwise the largest stored degree over element pairs.
double nonexclusivity(const Frame& frame, Subset a, Subset b);

}  // namespace dnum
