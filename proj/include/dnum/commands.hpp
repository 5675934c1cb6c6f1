#pragma once

// Subcommands of the dnumbers tool. Each returns a process exit code and
// writes to the given streams.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "dnum/measures.hpp"
#include "dnum/oracle.hpp"

namespace dnum::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kPropertyFailure = 2,
  kUsageError = 3,
};

enum class OutputFormat { table, csv, json_lines };
enum class SubsetScope { singletons, all };

std::optional<OutputFormat> parse_output_format(std::string_view name);

struct MeasureOptions {
  UnknownUncertaintyModel model = UnknownUncertaintyModel::coefficient_only;
  OutputFormat output = OutputFormat::table;
  SubsetScope subsets = SubsetScope::singletons;
};

struct CheckOptions {
  std::string suite = "all";
  std::size_t trials = 1000;
  std::uint64_t seed = 7;
  std::size_t frame_size = 3;
  std::optional<std::filesystem::path> counterexample_dir;
  /// "none", "drop-disjoint-branch" or "ignore-degrees".
  std::string mutant = "none";
};

struct GenOptions {
  oracle::GeneratorConfig config;
  std::optional<std::filesystem::path> out;
};

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err);

/// Completes the D number (reporting the mass moved onto {X}) and prints
/// intervals, per-singleton KU terms, KU and UU.
int cmd_measure(const std::filesystem::path& path, const MeasureOptions& options, std::ostream& out,
                std::ostream& err);

/// Writes the measure report for an already parsed D number.
void write_measure_report(const DNumber& raw, const MeasureOptions& options, std::ostream& out);

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err);

/// Writes a canonical raw document to options.out, or to `out` when unset.
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);

/// Shortest representation that parses back to the same double.
std::string shortest(double value);

}  // namespace dnum::cli
