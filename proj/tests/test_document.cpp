#include <doctest.h>

#include "dnum/document.hpp"
#include "dnum/oracle.hpp"

using namespace dnum;

namespace {

bool mentions(const std::vector<Diagnostic>& diags, std::string_view path, std::string_view text) {
  for (const auto& d : diags)
    if (d.path == path && d.message.find(text) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("parse minimal document") {
  const DNumber d = parse_document(R"({"frame": ["a", "b"], "masses": [{"set": ["a", "b"], "mass": 1}]})");
  CHECK(d.completed());
  CHECK(d.frame().labels() == std::vector<std::string>{"a", "b"});
  CHECK(d.mass(d.frame().theta()) == 1.0);
  CHECK_FALSE(d.frame().unknown_cardinality());
}

TEST_CASE("parse incomplete document with unknown block") {
  const DNumber d = parse_document(R"({
    "frame": ["a", "b", "c"],
    "unknown": {"cardinality": 4, "non_exclusivity": [{"pair": ["X", "b"], "degree": 0.25}]},
    "non_exclusivity": [{"pair": ["c", "a"], "degree": 0.5}],
    "masses": [{"set": ["a"], "mass": 0.4}, {"set": ["c", "b"], "mass": 0.2}]
  })");
  CHECK_FALSE(d.completed());
  CHECK(d.total_mass() == doctest::Approx(0.6));
  CHECK(d.frame().unknown_cardinality() == 4);
  CHECK(d.frame().degree(1, 3) == 0.25);
  CHECK(d.frame().degree(0, 2) == 0.5);
  CHECK(d.mass(d.frame().subset({"b", "c"})) == 0.2);
}

TEST_CASE("cardinality spelled as unknown") {
  const DNumber d = parse_document(R"({"frame": ["a"], "unknown": {"cardinality": "unknown"}, "masses": []})");
  CHECK_FALSE(d.frame().unknown_cardinality());
  CHECK(d.total_mass() == 0.0);
}

TEST_CASE("validation reports every violation") {
  const auto r = validate_document(R"({
    "frame": ["a", "b"],
    "non_exclusivity": [{"pair": ["a", "b"], "degree": 1.2}, {"pair": ["a", "q"], "degree": 0.1}],
    "masses": [{"set": [], "mass": 0.1}, {"set": ["z"], "mass": 0.2},
               {"set": ["a"], "mass": 0.3}, {"set": ["a"], "mass": 0.1}, {"set": ["b"], "mass": -1}],
    "extra": true
  })");
  CHECK_FALSE(r.dnumber);
  CHECK(mentions(r.diagnostics, "/non_exclusivity/0/degree", "degree for pair (a, b) 1.2 is outside [0, 1]"));
  CHECK(mentions(r.diagnostics, "/non_exclusivity/1/pair", "unknown label \"q\""));
  CHECK(mentions(r.diagnostics, "/masses/0", "D(∅) must be 0"));
  CHECK(mentions(r.diagnostics, "/masses/1/set/0", "unknown label \"z\""));
  CHECK(mentions(r.diagnostics, "/masses/3/set", "duplicate entry for set {a}"));
  CHECK(mentions(r.diagnostics, "/masses/4/mass", "nonnegative"));
  CHECK(mentions(r.diagnostics, "/extra", "unexpected field"));
  CHECK(r.diagnostics.size() == 7);
}

TEST_CASE("document errors") {
  auto fails_with = [](std::string_view text, std::string_view path, std::string_view message) {
    const auto r = validate_document(text);
    CAPTURE(text);
    CHECK_FALSE(r.dnumber);
    CHECK(mentions(r.diagnostics, path, message));
  };
  fails_with(R"({"frame": ["a", "b"], "masses": [{"set": ["a"], "mass": 0.6}, {"set": ["b"], "mass": 0.45}]})",
             "/masses", "total mass 1.05 exceeds 1");
  fails_with(R"({"frame": ["a", "a"], "masses": []})", "/frame/1", "duplicate label");
  fails_with(R"({"frame": ["a", "X"], "masses": []})", "/frame/1", "reserved");
  fails_with(R"({"frame": [], "masses": []})", "/frame", "nonempty");
  fails_with(R"({"masses": []})", "", "missing required field \"frame\"");
  fails_with(R"({"frame": ["a"]})", "", "missing required field \"masses\"");
  fails_with(R"({"frame": ["a", "b"], "masses": [{"set": ["a", "a"], "mass": 0.1}]})", "/masses/0/set/1",
             "repeated");
  fails_with(R"({"frame": ["a", "b"], "non_exclusivity": [{"pair": ["a", "X"], "degree": 0.1}], "masses": []})",
             "/non_exclusivity/0/pair", "belong under \"unknown\"");
  fails_with(R"({"frame": ["a"], "unknown": {"non_exclusivity": [{"pair": ["a", "a"], "degree": 0.1}]}, "masses": []})",
             "/unknown/non_exclusivity/0/pair", "must join");
  fails_with(R"({"frame": ["a"], "unknown": {"cardinality": 1}, "masses": []})", "/unknown/cardinality", ">= 2");
  fails_with(R"({"frame": ["a", "b"], "non_exclusivity": [{"pair": ["a", "b"], "degree": 0.1},
                 {"pair": ["b", "a"], "degree": 0.2}], "masses": []})",
             "/non_exclusivity/1/pair", "duplicate entry");
  fails_with("[1, 2]", "", "JSON object");

  const auto syntax = validate_document("{\"frame\": [\"a\",\n  \"b\" \"c\"]}");
  REQUIRE(syntax.diagnostics.size() == 1);
  CHECK(syntax.diagnostics[0].message.find("syntax error at line 2") != std::string::npos);

  CHECK_THROWS_AS(parse_document("{}"), DocumentError);
}

TEST_CASE("serialize canonical form") {
  auto f = std::make_shared<const Frame>(std::vector<std::string>{"a", "b"}, 3,
                                         std::vector<DegreeSpec>{{"b", "a", 0.3}, {"a", "X", 0.1}});
  const DNumber d(f, {{f->subset({"b", "a"}), 0.5}, {f->subset({"a"}), 0.25}});
  CHECK(serialize_document(d) == R"({
  "frame": [
    "a",
    "b"
  ],
  "unknown": {
    "cardinality": 3,
    "non_exclusivity": [
      {
        "pair": [
          "a",
          "X"
        ],
        "degree": 0.1
      }
    ]
  },
  "non_exclusivity": [
    {
      "pair": [
        "a",
        "b"
      ],
      "degree": 0.3
    }
  ],
  "masses": [
    {
      "set": [
        "a"
      ],
      "mass": 0.25
    },
    {
      "set": [
        "a",
        "b"
      ],
      "mass": 0.5
    }
  ]
}
)");
}

TEST_CASE("round trip over generated documents") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const std::size_t n = 1 + t % 6;
    const oracle::GeneratorConfig cfg{n, 1 + t % ((std::size_t{1} << n) - 1), oracle::Completeness::random,
                                      t % 2 ? oracle::Exclusivity::random_degrees : oracle::Exclusivity::exclusive,
                                      t};
    for (const DNumber& d : {oracle::generate_raw(cfg), oracle::generate(cfg)}) {
      const std::string text = serialize_document(d);
      const DNumber back = parse_document(text);
      CAPTURE(text);
      CHECK(back == d);
      CHECK(serialize_document(back) == text);
    }
  }
}
