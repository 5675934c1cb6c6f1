#include <doctest.h>

#include "dnum/frame.hpp"
#include "dnum/oracle.hpp"
#include "support.hpp"

using namespace dnum;
using dnum::testing::make_frame;

TEST_CASE("build_frame defaults unlisted pairs to exclusive") {
  const Frame f = build_frame({"a", "b"}, 2, {});
  CHECK(f.degree(0, 1) == 0.0);
  CHECK(f.degree(0, 0) == 1.0);
  CHECK(f.degree(2, 2) == 1.0);
  CHECK(f.unknown_index() == 2);
  CHECK(f.is_exclusive());
}

TEST_CASE("build_frame stores degrees symmetrically") {
  const Frame f = build_frame({"a", "b"}, 2, {{"a", "b", 0.3}});
  CHECK(f.degree(0, 1) == 0.3);
  CHECK(f.degree(1, 0) == 0.3);
  CHECK_FALSE(f.is_exclusive());

  const Frame g = build_frame({"a", "b"}, std::nullopt, {{"X", "b", 0.6}});
  CHECK(g.degree(2, 1) == 0.6);
  CHECK(g.degree(1, 2) == 0.6);
}

TEST_CASE("build_frame rejects bad input") {
  CHECK_THROWS_WITH_AS(build_frame({"a", "a"}, 2, {}), doctest::Contains("duplicate label"), DNumberError);
  CHECK_THROWS_AS(build_frame({"a", "b"}, 2, {{"a", "b", 1.2}}), DNumberError);
  CHECK_THROWS_AS(build_frame({"a", "b"}, 2, {{"a", "b", -0.1}}), DNumberError);
  CHECK_THROWS_WITH_AS(build_frame({"a", "b"}, 2, {{"a", "z", 0.1}}), doctest::Contains("unknown label"),
                       DNumberError);
  CHECK_THROWS_AS(build_frame({"a", "b"}, 1, {}), DNumberError);
  CHECK_THROWS_AS(build_frame({}, std::nullopt, {}), DNumberError);
  CHECK_THROWS_AS(build_frame({"a", ""}, std::nullopt, {}), DNumberError);
  CHECK_THROWS_AS(build_frame({"a", "X"}, std::nullopt, {}), DNumberError);
  CHECK_THROWS_AS(build_frame({"a", "b"}, std::nullopt, {{"a", "a", 0.5}}), DNumberError);
}

TEST_CASE("subset encoding") {
  const Frame f({"a", "b", "c"});
  CHECK(f.subset({"a", "c"}).mask == 0b101);
  CHECK(f.subset({"X"}) == f.unknown());
  CHECK(f.universe().mask == 0b1111);
  CHECK(f.describe(f.subset({"c", "X", "a"})) == "{a,c,X}");
  CHECK(indices_of(Subset{0b1010}) == std::vector<std::size_t>{1, 3});
  CHECK_THROWS_AS(f.subset({"q"}), DNumberError);
}

TEST_CASE("nonexclusivity examples") {
  auto f = make_frame({"a", "b", "c"}, {{"a", "c", 0.4}});
  CHECK(nonexclusivity(*f, f->subset({"a", "b"}), f->subset({"b", "c"})) == 1.0);
  CHECK(nonexclusivity(*f, f->subset({"a"}), f->subset({"c"})) == 0.4);

  auto g = make_frame({"a", "b", "c"}, {{"a", "c", 0.2}, {"b", "c", 0.5}});
  const Subset ab = g->subset({"a", "b"});
  const Subset c = g->subset({"c"});
  CHECK(nonexclusivity(*g, ab, c) == 0.5);
  CHECK(oracle::nonexclusivity_by_enumeration(*g, ab, c) == 0.5);

  CHECK_THROWS_AS(nonexclusivity(*g, Subset{}, c), DNumberError);
  CHECK_THROWS_AS(nonexclusivity(*g, Subset{0b10000}, c), DNumberError);
}

TEST_CASE("nonexclusivity properties over random frames") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 1 + seed % 4;
    auto f = oracle::generate_frame(n, oracle::Exclusivity::random_degrees, seed);
    const std::uint64_t end = std::uint64_t{1} << (n + 1);
    for (std::uint64_t x = 1; x < end; ++x) {
      for (std::uint64_t y = 1; y < end; ++y) {
        const Subset a{x}, b{y};
        const double u = nonexclusivity(*f, a, b);
        CHECK(u == nonexclusivity(*f, b, a));
        CHECK(u == oracle::nonexclusivity_by_enumeration(*f, a, b));
        CHECK(u >= 0.0);
        CHECK(u <= 1.0);
        if (a.is_subset_of(b)) CHECK(u == 1.0);
        // Growing either argument never lowers the degree.
        if (a.is_subset_of(b)) {
          for (std::uint64_t z = 1; z < end; ++z) CHECK(nonexclusivity(*f, a, Subset{z}) <= nonexclusivity(*f, b, Subset{z}));
        }
      }
    }
  }
}
