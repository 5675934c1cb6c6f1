// dnumbers: validate, measure, generate and property-check D numbers.

#include <iostream>

#include <CLI11.hpp>

#include "dnum/commands.hpp"

using namespace dnum;

int main(int argc, char** argv) {
  CLI::App app{"D numbers: belief intervals and total uncertainty (KU, UU)"};
  app.require_subcommand(1);

  std::string output = "table";
  std::string unknown_model = "coefficient";
  std::uint64_t seed = 7;
  std::size_t trials = 1000;
  std::size_t frame_size = 3;
  std::string counterexample_dir;

  app.option_defaults()->always_capture_default();
  app.add_option("--output", output, "table | csv | json-lines")
      ->check(CLI::IsMember({"table", "csv", "json-lines"}));
  app.add_option("--unknown-model", unknown_model, "U(X) used to evaluate UU")
      ->check(CLI::IsMember({"coefficient", "unit", "cardinality", "log2"}));
  app.add_option("--seed", seed, "random seed");
  app.add_option("--trials", trials, "trials per property suite");
  app.add_option("--frame-size", frame_size, "number of frame elements for generated instances");
  app.add_option("--counterexample-dir", counterexample_dir, "where failing instances are written");

  std::string path;
  auto* validate = app.add_subcommand("validate", "check a document and list every violation");
  validate->add_option("file", path, "document path")->required();
  validate->fallthrough();

  std::string subsets = "singletons";
  auto* measure = app.add_subcommand("measure", "print belief intervals, KU and UU");
  measure->add_option("file", path, "document path")->required();
  measure->add_option("--subsets", subsets, "singletons | all")->check(CLI::IsMember({"singletons", "all"}));
  measure->fallthrough();

  cli::CheckOptions check_options;
  auto* check = app.add_subcommand("check", "run the property suites");
  check->add_option("suite", check_options.suite, "range | monotonicity | set-consistency | degeneration | oracle | all")
      ->check(CLI::IsMember({"range", "monotonicity", "set-consistency", "degeneration", "oracle", "all"}));
  check->add_option("--mutant", check_options.mutant, "swap in a broken plausibility (suite self-test)")
      ->check(CLI::IsMember({"none", "drop-disjoint-branch", "ignore-degrees"}))
      ->group("");
  check->fallthrough();

  cli::GenOptions gen_options;
  std::size_t focal_count = 1;
  std::string completeness = "random";
  std::string exclusivity = "exclusive";
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "write a random canonical document");
  gen->add_option("--focal-count", focal_count, "number of focal sets");
  gen->add_option("--completeness", completeness)->check(CLI::IsMember({"complete", "incomplete", "random"}));
  gen->add_option("--exclusivity", exclusivity)->check(CLI::IsMember({"exclusive", "random-degrees"}));
  gen->add_option("-o,--out", out_path, "output file (stdout when omitted)");
  gen->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kUsageError;
  }

  if (*validate) return cli::cmd_validate(path, std::cout, std::cerr);

  if (*measure) {
    cli::MeasureOptions options;
    options.model = *parse_unknown_model(unknown_model);
    options.output = *cli::parse_output_format(output);
    options.subsets = subsets == "all" ? cli::SubsetScope::all : cli::SubsetScope::singletons;
    return cli::cmd_measure(path, options, std::cout, std::cerr);
  }

  if (*check) {
    check_options.trials = trials;
    check_options.seed = seed;
    check_options.frame_size = frame_size;
    if (!counterexample_dir.empty()) check_options.counterexample_dir = counterexample_dir;
    return cli::cmd_check(check_options, std::cout, std::cerr);
  }

  gen_options.config = {frame_size, focal_count,
                        completeness == "complete"     ? oracle::Completeness::complete
                        : completeness == "incomplete" ? oracle::Completeness::incomplete
                                                       : oracle::Completeness::random,
                        exclusivity == "exclusive" ? oracle::Exclusivity::exclusive
                                                   : oracle::Exclusivity::random_degrees,
                        seed};
  if (!out_path.empty()) gen_options.out = out_path;
  return cli::cmd_gen(gen_options, std::cout, std::cerr);
}
