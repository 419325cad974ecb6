#include "doctest.h"

#include "mhs/domination.hpp"
#include "mhs/mhs_sums.hpp"

#include <cstdint>
#include <vector>

using mhs::Composition;

TEST_SUITE("domination") {

TEST_CASE("direct witnesses") {
  // Suffix-only: raising entries while keeping the weight up gives l = 0.
  auto w = mhs::dominates(Composition({1, 2}), Composition({1, 1}));
  REQUIRE(w.has_value());
  CHECK(w->l == 0);
  // Prefix decrease needs l past the offending index.
  w = mhs::dominates(Composition({1, 2}), Composition({2, 1}));
  REQUIRE(w.has_value());
  CHECK(w->l == 1);
  // Equal tuples dominate themselves.
  CHECK(mhs::dominates(Composition({3, 1, 4}), Composition({3, 1, 4}))
            .has_value());
}

TEST_CASE("non-domination") {
  // Weight drops.
  CHECK_FALSE(mhs::dominates(Composition({1, 1}), Composition({1, 2})).has_value());
  // Smaller entry in a position no prefix can absorb.
  CHECK_FALSE(mhs::dominates(Composition({2, 1}), Composition({1, 2})).has_value());
  CHECK_FALSE(mhs::dominates(Composition({5, 5, 1}), Composition({1, 1, 2})).has_value());
  CHECK_THROWS_AS(mhs::dominates(Composition({1}), Composition({1, 1})),
                  std::invalid_argument);
}

TEST_CASE("witness lists are ascending and start at the minimum") {
  const auto all =
      mhs::domination_witnesses(Composition({1, 2, 2}), Composition({1, 1, 1}));
  REQUIRE(!all.empty());
  CHECK(all.front() == 0);
  for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  const auto w =
      mhs::dominates(Composition({1, 2, 2}), Composition({1, 1, 1}));
  CHECK(w->l == all.front());
}

TEST_CASE("domination implies pointwise sum comparison") {
  const std::vector<std::pair<Composition, Composition>> pairs = {
      {Composition({1, 2}), Composition({1, 1})},
      {Composition({1, 2}), Composition({2, 1})},
      {Composition({1, 1, 3}), Composition({2, 1, 1})},
      {Composition({2, 2, 2}), Composition({1, 1, 1})},
  };
  for (const auto& [s, t] : pairs) {
    REQUIRE(mhs::dominates(s, t).has_value());
    for (std::uint64_t n : {3ULL, 5ULL, 9ULL, 20ULL})
      CHECK(mhs::mhs_eval(n, s) <= mhs::mhs_eval(n, t));
  }
}

TEST_CASE("every composition sits under the all-ones tuple") {
  const std::vector<Composition> samples = {
      Composition({3, 1, 2}), Composition({1, 1, 1}), Composition({7, 2, 9})};
  const Composition ones({1, 1, 1});
  for (const auto& s : samples) {
    const auto w = mhs::dominates(s, ones);
    REQUIRE(w.has_value());
    CHECK(w->l == 0);
  }
}

TEST_CASE("excluded tails at length two") {
  const std::vector<Composition> optimal = {Composition({1, 2})};
  CHECK(mhs::is_excluded_tail(Composition({1}), optimal));
  CHECK_FALSE(mhs::is_excluded_tail(Composition({2}), optimal));
  CHECK_FALSE(mhs::is_excluded_tail(Composition({3}), optimal));
}

TEST_CASE("cover report matches the length-two data by hand") {
  const std::vector<Composition> optimal = {Composition({1, 2})};
  const std::vector<Composition> exclusion = {Composition({1})};
  const auto report = mhs::exclusion_cover_report(2, optimal, exclusion, 4);
  CHECK(report.ok);
  CHECK(report.tails == 4);
  CHECK(report.dominated == 3);
  CHECK(report.boundary_all_dominated);
  CHECK(report.uncovered_non_exclusion.empty());
  CHECK(report.exclusion_but_dominated.empty());
}

TEST_CASE("cover report flags holes and dead rows") {
  const std::vector<Composition> optimal = {Composition({1, 2})};
  // Tail (1) missing from the exclusion list: not ok.
  const auto holes = mhs::exclusion_cover_report(2, optimal, {}, 4);
  CHECK_FALSE(holes.ok);
  REQUIRE(holes.uncovered_non_exclusion.size() == 1);
  CHECK(holes.uncovered_non_exclusion[0] == Composition({1}));
  // Tail (2) listed although dominated: reported as a dead row.
  const auto dead = mhs::exclusion_cover_report(
      2, optimal, {Composition({1}), Composition({2})}, 4);
  CHECK(dead.ok);
  REQUIRE(dead.exclusion_but_dominated.size() == 1);
  CHECK(dead.exclusion_but_dominated[0] == Composition({2}));
}

}  // TEST_SUITE
