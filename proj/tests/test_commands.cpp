#include <doctest.h>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dnum/commands.hpp"
#include "dnum/document.hpp"

using namespace dnum;
using namespace dnum::cli;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("dnumbers-test-" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "-" +
             std::to_string(counter_++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }

  std::filesystem::path write(const std::string& name, std::string_view text) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }
  const std::filesystem::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr std::string_view kVacuous = R"({"frame": ["a", "b"], "masses": [{"set": ["a", "b"], "mass": 1}]})";
constexpr std::string_view kIncomplete = R"({"frame": ["a", "b"], "masses": [{"set": ["a"], "mass": 0.6}]})";

}  // namespace

TEST_CASE("shortest round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 0.0, 1.0, 0.2788897449072022, 5e-324}) {
    const std::string text = shortest(v);
    double back = -1.0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    CHECK(back == v);
  }
  CHECK(shortest(0.4) == "0.4");
  CHECK(shortest(2.0) == "2");
}

TEST_CASE("cmd_validate") {
  TempDir dir;
  std::ostringstream out, err;
  CHECK(cmd_validate(dir.write("ok.json", kVacuous), out, err) == kSuccess);
  CHECK(out.str().find("valid") != std::string::npos);

  std::ostringstream out2, err2;
  const auto bad = dir.write("bad.json", R"({"frame": ["a", "b"], "masses": [{"set": [], "mass": 0.2},
      {"set": ["a"], "mass": 0.6}, {"set": ["b"], "mass": 0.45}]})");
  CHECK(cmd_validate(bad, out2, err2) == kValidationFailure);
  CHECK(err2.str().find("D(∅) must be 0") != std::string::npos);
  CHECK(err2.str().find("total mass 1.05 exceeds 1") != std::string::npos);

  std::ostringstream out3, err3;
  CHECK(cmd_validate(dir.path() / "missing.json", out3, err3) == kUsageError);
}

TEST_CASE("cmd_measure table") {
  TempDir dir;
  std::ostringstream out, err;
  REQUIRE(cmd_measure(dir.write("vac.json", kVacuous), {}, out, err) == kSuccess);
  CHECK(out.str().find("KU=2.0000000\n") != std::string::npos);
  CHECK(out.str().find("UU=0.0000000\n") != std::string::npos);
  CHECK(out.str().find("completion") == std::string::npos);

  std::ostringstream out2;
  MeasureOptions unit;
  unit.model = UnknownUncertaintyModel::unit;
  REQUIRE(cmd_measure(dir.write("inc.json", kIncomplete), unit, out2, err) == kSuccess);
  const std::string s = out2.str();
  CHECK(s.find("completion: added mass 0.4000000 to {X}") != std::string::npos);
  CHECK(s.find("KU=0.2788897\n") != std::string::npos);
  CHECK(s.find("UU=0.4000000\n") != std::string::npos);
  CHECK(s.find("UU(unit)=0.4000000\n") != std::string::npos);
  CHECK(s.find("(KU, UU)=(0.2788897, 0.4000000)") != std::string::npos);
  CHECK(s.find("a        0.6000000  0.6000000  0.2788897") != std::string::npos);
}

TEST_CASE("cmd_measure csv and json-lines") {
  TempDir dir;
  const auto path = dir.write("inc.json", kIncomplete);

  std::ostringstream csv, err;
  MeasureOptions options;
  options.output = OutputFormat::csv;
  REQUIRE(cmd_measure(path, options, csv, err) == kSuccess);
  CHECK(csv.str().rfind("element,bel,pl,term\na,0.6,0.6,0.2788897449072022\nb,0,0,0\n", 0) == 0);
  CHECK(csv.str().find("[KU],,,0.2788897449072022\n") != std::string::npos);

  std::ostringstream all;
  options.subsets = SubsetScope::all;
  REQUIRE(cmd_measure(path, options, all, err) == kSuccess);
  CHECK(all.str().find("{X},0.4,0.4,\n") != std::string::npos);
  CHECK(all.str().find("\"{a,b,X}\",1,1,\n") != std::string::npos);

  std::ostringstream jl;
  options.output = OutputFormat::json_lines;
  options.subsets = SubsetScope::singletons;
  REQUIRE(cmd_measure(path, options, jl, err) == kSuccess);
  CHECK(jl.str().find(R"({"set":["a"],"bel":0.6,"pl":0.6,"term":0.2788897449072022})") != std::string::npos);
  CHECK(jl.str().find(R"("uu_coefficient":0.4)") != std::string::npos);
}

TEST_CASE("cmd_measure errors") {
  TempDir dir;
  std::ostringstream out, err;
  MeasureOptions options;
  options.model = UnknownUncertaintyModel::cardinality;
  CHECK(cmd_measure(dir.write("inc.json", kIncomplete), options, out, err) == kUsageError);
  CHECK(cmd_measure(dir.write("bad.json", "{"), {}, out, err) == kValidationFailure);
}

TEST_CASE("cmd_gen") {
  TempDir dir;
  std::ostringstream out, err;
  GenOptions options;
  options.config = {3, 4, oracle::Completeness::incomplete, oracle::Exclusivity::random_degrees, 17};
  options.out = dir.path() / "one.json";
  REQUIRE(cmd_gen(options, out, err) == kSuccess);
  options.out = dir.path() / "two.json";
  REQUIRE(cmd_gen(options, out, err) == kSuccess);
  const std::string one = slurp(dir.path() / "one.json");
  CHECK(one == slurp(dir.path() / "two.json"));
  CHECK(parse_document(one).total_mass() < 1.0);

  options.config = {2, 9, oracle::Completeness::random, oracle::Exclusivity::exclusive, 1};
  std::ostringstream err2;
  CHECK(cmd_gen(options, out, err2) == kUsageError);
  CHECK(err2.str().find("infeasible") != std::string::npos);
}

TEST_CASE("cmd_check") {
  std::ostringstream out, err;
  CheckOptions options;
  options.trials = 100;
  CHECK(cmd_check(options, out, err) == kSuccess);
  const std::string s = out.str();
  for (auto suite : {"range", "monotonicity", "set-consistency", "degeneration", "oracle"}) {
    CHECK(s.find(suite) != std::string::npos);
  }
  CHECK(s.find("FAIL") == std::string::npos);
  CHECK(s.find("|A|=1 deviation") != std::string::npos);

  TempDir dir;
  std::ostringstream mout;
  options.suite = "oracle";
  options.mutant = "ignore-degrees";
  options.counterexample_dir = dir.path() / "cex";
  CHECK(cmd_check(options, mout, err) == kPropertyFailure);
  CHECK(mout.str().find("oracle          FAIL") != std::string::npos);
  CHECK(std::filesystem::exists(dir.path() / "cex" / "oracle-0.json"));
  CHECK_NOTHROW(parse_document(slurp(dir.path() / "cex" / "oracle-0.json")));

  options.suite = "bogus";
  CHECK(cmd_check(options, mout, err) == kUsageError);
  options.suite = "all";
  options.mutant = "none";
  options.frame_size = 9;
  CHECK(cmd_check(options, mout, err) == kUsageError);
}
