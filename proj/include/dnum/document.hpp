#pragma once

// JSON carrier for a frame plus a raw D number.
//
//   {
//     "frame": ["a", "b", "c"],
//     "unknown": {"cardinality": 4,
//                 "non_exclusivity": [{"pair": ["a", "X"], "degree": 0.2}]},
//     "non_exclusivity": [{"pair": ["a", "b"], "degree": 0.3}],
//     "masses": [{"set": ["a"], "mass": 0.6}, {"set": ["a", "b"], "mass": 0.2}]
//   }
//
// Degrees are given for singleton pairs only; pairs with X live under
// "unknown". "unknown" and both "non_exclusivity" lists are optional.

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dnum/dnumber.hpp"

namespace dnum {

struct Diagnostic {
  /// JSON pointer of the offending field ("" for the document root).
  std::string path;
  std::string message;
};

std::string to_string(const Diagnostic& diagnostic);

class DocumentError : public DNumberError {
 public:
  explicit DocumentError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

struct ValidationResult {
  /// Set iff diagnostics is empty.
  std::optional<DNumber> dnumber;
  std::vector<Diagnostic> diagnostics;
};

/// Parses and validates, reporting every violation found.
ValidationResult validate_document(std::string_view text);

/// Parses a document into a raw D number; throws DocumentError.
DNumber parse_document(std::string_view text);

/// Canonical form: frame order, nonzero degrees only (i < j), focal sets in
/// ascending mask order, numbers in shortest round-trip form.
std::string serialize_document(const DNumber& d);

}  // namespace dnum
