#include "dnum/commands.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "dnum/document.hpp"

namespace dnum::cli {

namespace {

std::string fixed7(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", value);
  return buf;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::optional<std::string> read_file(const std::filesystem::path& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open " << path.string() << "\n";
    return std::nullopt;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Row {
  Subset set;
  BeliefInterval interval;
  std::optional<double> term;  // singletons of Theta only
};

std::vector<Row> interval_rows(const DNumber& d, SubsetScope scope) {
  std::vector<Row> rows;
  const Frame& frame = d.frame();
  for (std::size_t i = 0; i < frame.size(); ++i) {
    const Subset s = Subset::singleton(i);
    const auto interval = belief_interval(d, s);
    rows.push_back({s, interval, known_uncertainty_term(interval)});
  }
  if (scope == SubsetScope::all) {
    const std::uint64_t end = std::uint64_t{1} << (frame.size() + 1);
    for (std::uint64_t m = 1; m < end; ++m) {
      const Subset s{m};
      if (s.size() == 1 && !s.contains(frame.unknown_index())) continue;
      rows.push_back({s, belief_interval(d, s), std::nullopt});
    }
  }
  return rows;
}

std::string row_name(const Frame& frame, const Row& row) {
  return row.term ? frame.label(indices_of(row.set).front()) : frame.describe(row.set);
}

int write_report(const oracle::CheckReport& report, const CheckOptions& options, std::ostream& out,
                 std::ostream& err) {
  out << std::left << std::setw(16) << report.property << (report.passed() ? "PASS" : "FAIL")
      << "  trials=" << report.trials << " failures=" << report.failures.size() << " max_violation=" << std::scientific
      << std::setprecision(3) << report.max_violation << std::defaultfloat << "\n";
  for (const auto& note : report.notes) out << "  note: " << note << "\n";
  if (!report.passed() && options.counterexample_dir) {
    std::error_code ec;
    std::filesystem::create_directories(*options.counterexample_dir, ec);
    for (std::size_t i = 0; i < report.failures.size(); ++i) {
      const auto file = *options.counterexample_dir / (report.property + "-" + std::to_string(i) + ".json");
      std::ofstream f(file, std::ios::binary);
      if (!f) {
        err << "error: cannot write " << file.string() << "\n";
        return kUsageError;
      }
      f << report.failures[i];
    }
  }
  return report.passed() ? kSuccess : kPropertyFailure;
}

std::optional<oracle::MeasureImpl> measure_impl(const std::string& name) {
  if (name == "none") return oracle::library_measures();
  if (name == "drop-disjoint-branch") return oracle::mutant_pl_without_disjoint_branch();
  if (name == "ignore-degrees") return oracle::mutant_pl_ignoring_degrees();
  return std::nullopt;
}

}  // namespace

std::string shortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json-lines") return OutputFormat::json_lines;
  return std::nullopt;
}

int cmd_validate(const std::filesystem::path& path, std::ostream& out, std::ostream& err) {
  auto text = read_file(path, err);
  if (!text) return kUsageError;
  auto result = validate_document(*text);
  if (result.dnumber) {
    out << path.string() << ": valid (" << result.dnumber->focal_elements().size() << " focal sets, total mass "
        << shortest(result.dnumber->total_mass()) << (result.dnumber->completed() ? ", complete" : ", incomplete")
        << ")\n";
    return kSuccess;
  }
  for (const auto& d : result.diagnostics) err << path.string() << ":" << to_string(d) << "\n";
  return kValidationFailure;
}

void write_measure_report(const DNumber& raw, const MeasureOptions& options, std::ostream& out) {
  const DNumber d = complete(raw);
  const double injected = d.mass(d.frame().unknown()) - raw.mass(d.frame().unknown());
  const Frame& frame = d.frame();
  const auto rows = interval_rows(d, options.subsets);
  const TotalUncertainty tu = total_uncertainty(d, options.model);

  switch (options.output) {
    case OutputFormat::table: {
      std::size_t width = 7;
      for (const auto& r : rows) width = std::max(width, row_name(frame, r).size());
      out << "frame: " << frame.describe(frame.theta()) << "  |X|: "
          << (frame.unknown_cardinality() ? std::to_string(*frame.unknown_cardinality()) : "unknown") << "\n";
      if (injected > 0.0) out << "completion: added mass " << fixed7(injected) << " to {X}\n";
      out << std::left << std::setw(static_cast<int>(width)) << "element" << "  bel        pl         1-d\n";
      for (const auto& r : rows) {
        out << std::setw(static_cast<int>(width)) << row_name(frame, r) << "  " << fixed7(r.interval.lower()) << "  "
            << fixed7(r.interval.upper());
        if (r.term) out << "  " << fixed7(*r.term);
        out << "\n";
      }
      out << "KU=" << fixed7(tu.ku) << "\n";
      out << "UU=" << fixed7(tu.uu_coefficient) << "\n";
      if (tu.uu_evaluated) {
        out << "UU(" << to_string(options.model) << ")=" << fixed7(*tu.uu_evaluated) << "\n";
        out << "TU=" << fixed7(*tu.scalar()) << "\n";
      }
      out << "(KU, UU)=(" << fixed7(tu.ku) << ", " << fixed7(tu.uu_coefficient) << ")\n";
      break;
    }
    case OutputFormat::csv: {
      out << "element,bel,pl,term\n";
      for (const auto& r : rows) {
        out << csv_field(row_name(frame, r)) << "," << shortest(r.interval.lower()) << ","
            << shortest(r.interval.upper()) << "," << (r.term ? shortest(*r.term) : "") << "\n";
      }
      out << "[KU],,," << shortest(tu.ku) << "\n";
      out << "[UU],,," << shortest(tu.uu_coefficient) << "\n";
      if (tu.uu_evaluated) out << "[UU_evaluated],,," << shortest(*tu.uu_evaluated) << "\n";
      out << "[X_injected],,," << shortest(injected) << "\n";
      break;
    }
    case OutputFormat::json_lines: {
      for (const auto& r : rows) {
        nlohmann::ordered_json line;
        nlohmann::ordered_json set = nlohmann::ordered_json::array();
        for (auto i : indices_of(r.set)) set.push_back(frame.label(i));
        line["set"] = std::move(set);
        line["bel"] = r.interval.lower();
        line["pl"] = r.interval.upper();
        if (r.term) line["term"] = *r.term;
        out << line.dump() << "\n";
      }
      nlohmann::ordered_json summary;
      summary["ku"] = tu.ku;
      summary["uu_coefficient"] = tu.uu_coefficient;
      summary["uu_model"] = to_string(options.model);
      summary["uu_evaluated"] = tu.uu_evaluated ? nlohmann::ordered_json(*tu.uu_evaluated) : nlohmann::ordered_json();
      summary["injected_x_mass"] = injected;
      out << nlohmann::ordered_json{{"summary", summary}}.dump() << "\n";
      break;
    }
  }
}

int cmd_measure(const std::filesystem::path& path, const MeasureOptions& options, std::ostream& out,
                std::ostream& err) {
  auto text = read_file(path, err);
  if (!text) return kUsageError;
  auto result = validate_document(*text);
  if (!result.dnumber) {
    for (const auto& d : result.diagnostics) err << path.string() << ":" << to_string(d) << "\n";
    return kValidationFailure;
  }
  const Frame& frame = result.dnumber->frame();
  if (options.subsets == SubsetScope::all && frame.size() > oracle::kMaxEnumeratedFrame) {
    err << "error: --subsets all is limited to frames of at most " << oracle::kMaxEnumeratedFrame << " elements\n";
    return kUsageError;
  }
  if ((options.model == UnknownUncertaintyModel::cardinality ||
       options.model == UnknownUncertaintyModel::log2_cardinality) &&
      !frame.unknown_cardinality()) {
    err << "error: --unknown-model " << to_string(options.model)
        << " needs \"unknown\": {\"cardinality\": n} in the document\n";
    return kUsageError;
  }
  write_measure_report(*result.dnumber, options, out);
  return kSuccess;
}

int cmd_check(const CheckOptions& options, std::ostream& out, std::ostream& err) {
  const auto impl = measure_impl(options.mutant);
  if (!impl) {
    err << "error: unknown mutant \"" << options.mutant << "\"\n";
    return kUsageError;
  }
  const std::size_t n = options.frame_size;
  if (n < 1 || n > oracle::kMaxEnumeratedFrame) {
    err << "error: --frame-size must lie in [1, " << oracle::kMaxEnumeratedFrame << "]\n";
    return kUsageError;
  }
  const oracle::GeneratorConfig config{n, (std::size_t{1} << n) - 1, oracle::Completeness::random,
                                       oracle::Exclusivity::random_degrees, options.seed};

  static constexpr std::string_view kSuites[] = {"range", "monotonicity", "set-consistency", "degeneration",
                                                 "oracle"};
  const bool all = options.suite == "all";
  if (!all && std::find(std::begin(kSuites), std::end(kSuites), options.suite) == std::end(kSuites)) {
    err << "error: unknown suite \"" << options.suite << "\"\n";
    return kUsageError;
  }
  if (options.mutant != "none") out << "measuring with mutant: " << impl->name << "\n";

  int status = kSuccess;
  auto run = [&](std::string_view suite, auto&& produce) {
    if (!all && options.suite != suite) return;
    const int code = write_report(produce(), options, out, err);
    status = std::max(status, code);
  };
  run("range", [&] { return oracle::check_range(options.trials, config, *impl); });
  run("monotonicity", [&] { return oracle::check_monotonicity(options.trials, config, *impl); });
  run("set-consistency", [&] {
    auto report = oracle::check_set_consistency(
        oracle::generate_frame(n, oracle::Exclusivity::exclusive, options.seed), *impl);
    report.merge(oracle::check_set_consistency(
        oracle::generate_frame(n, oracle::Exclusivity::random_degrees, options.seed), *impl));
    return report;
  });
  run("degeneration", [&] { return oracle::check_degeneration(options.trials, n, options.seed, *impl); });
  run("oracle", [&] { return oracle::check_oracle_equivalence(options.trials, config, *impl); });
  return status;
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = serialize_document(oracle::generate_raw(options.config));
  } catch (const DNumberError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (!options.out) {
    out << text;
    return kSuccess;
  }
  std::ofstream f(*options.out, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write " << options.out->string() << "\n";
    return kUsageError;
  }
  return kSuccess;
}

}  // namespace dnum::cli
