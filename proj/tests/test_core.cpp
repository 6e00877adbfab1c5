#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ndlu/core.hpp"
#include "support.hpp"

using namespace ndlu;

namespace {

Solution sol(std::string id, std::vector<double> v) { return Solution(std::move(id), std::move(v)); }

}  // namespace

TEST_CASE("solution construction rejects degenerate vectors") {
  CHECK_NOTHROW(sol("a", {1, 2}));
  CHECK_THROWS_AS(sol("a", {1}), InvalidSolutionError);
  CHECK_THROWS_AS(sol("a", {}), InvalidSolutionError);
  CHECK_THROWS_AS(sol("a", {1, std::numeric_limits<double>::quiet_NaN()}), InvalidSolutionError);
  CHECK_THROWS_AS(sol("a", {std::numeric_limits<double>::infinity(), 0}), InvalidSolutionError);
}

TEST_CASE("dom_nature on small vectors") {
  Counter c;
  CHECK(dom_nature(sol("a", {1, 1}), sol("b", {2, 2}), c) == 1);
  CHECK(dom_nature(sol("a", {2, 2}), sol("b", {1, 1}), c) == -1);
  CHECK(dom_nature(sol("a", {1, 2}), sol("b", {2, 1}), c) == 0);
  CHECK(dom_nature(sol("a", {1, 2}), sol("b", {1, 3}), c) == 1);
  // identical vectors are neither dominating nor dominated
  CHECK(dom_nature(sol("a", {3, 3}), sol("b", {3, 3}), c) == 0);
  CHECK(c.pair_compares == 5);
}

TEST_CASE("check_dom separates identical vectors") {
  Counter c;
  CHECK(check_dom(sol("a", {3, 3, 3}), sol("b", {3, 3, 3}), c) == DomRelation::Identical);
  CHECK(check_dom(sol("a", {1, 3, 3}), sol("b", {3, 3, 3}), c) == DomRelation::Dominates);
  CHECK(check_dom(sol("a", {4, 3, 3}), sol("b", {3, 3, 3}), c) == DomRelation::DominatedBy);
  CHECK(check_dom(sol("a", {4, 2, 3}), sol("b", {3, 3, 3}), c) == DomRelation::NonDominated);
  CHECK(c.pair_compares == 4);
}

TEST_CASE("relation is uncounted and checks dimensions") {
  const std::vector<double> a{1, 2};
  const std::vector<double> b{1, 2, 3};
  CHECK_THROWS_AS(relation(a, b), DimensionError);
  Counter c;
  CHECK_THROWS_AS(dom_nature(sol("a", {1, 2}), sol("b", {1, 2, 3}), c), DimensionError);
  CHECK_THROWS_AS(check_dom(sol("a", {1, 2}), sol("b", {1, 2, 3}), c), DimensionError);
}

TEST_CASE("antisymmetry and agreement with a naive dominance test") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t m = 2 + rng() % 4;
    auto pair = support::random_population(rng, 2, m, 4);
    Counter c;
    const int ab = dom_nature(pair[0], pair[1], c);
    const int ba = dom_nature(pair[1], pair[0], c);
    REQUIRE(ab == -ba);
    REQUIRE((ab == 1) == support::dominates(pair[0].objectives, pair[1].objectives));
    const auto r = check_dom(pair[0], pair[1], c);
    REQUIRE((r == DomRelation::Identical) == (pair[0].objectives == pair[1].objectives));
    REQUIRE(c.pair_compares == 3);
  }
}

TEST_CASE("front set bookkeeping") {
  FrontSet fs = support::nine_in_four();
  CHECK(fs.objectives() == 2);
  CHECK(fs.size() == 9);
  CHECK(fs.profile() == std::vector<std::size_t>{1, 3, 2, 3});
  CHECK(fs.contains("8"));
  CHECK_FALSE(fs.contains("10"));
  REQUIRE(fs.find("8") != nullptr);
  CHECK(fs.find("8")->objectives == std::vector<double>{7, 3});
  CHECK(fs.flatten().size() == 9);
  CHECK_THROWS_AS(fs.admit(sol("8", {0, 0})), DuplicateIdError);
  CHECK_THROWS_AS(fs.admit(sol("x", {0, 0, 0})), DimensionError);
  CHECK_NOTHROW(fs.admit(sol("x", {0, 0})));

  FrontSet empty;
  CHECK(empty.objectives() == 0);
  empty.admit(sol("x", {0, 0, 0}));
  CHECK(empty.objectives() == 3);
}

TEST_CASE("validate accepts sound partitions and names each broken invariant") {
  CHECK(validate(support::nine_in_four()).empty());
  CHECK(validate(FrontSet{}).empty());

  auto kinds = [](const FrontSet& fs) {
    std::set<Violation::Kind> out;
    for (const auto& v : validate(fs)) out.insert(v.kind);
    return out;
  };
  CHECK(kinds(support::build({{{"a", {1, 1}}}, {}})).contains(Violation::Kind::EmptyFront));
  CHECK(kinds(support::build({{{"a", {1, 1}}, {"b", {2, 2}}}})).contains(Violation::Kind::IntraFrontDominance));
  CHECK(kinds(support::build({{{"a", {1, 2}}}, {{"b", {2, 1}}}})).contains(Violation::Kind::NotDominatedByPrevious));
  CHECK(kinds(support::build({{{"a", {1, 2}}, {"a", {2, 1}}}})).contains(Violation::Kind::DuplicateId));
  CHECK(kinds(support::build({{{"a", {1, 2, 3}}, {"b", {2, 1}}}})).contains(Violation::Kind::Dimension));

  // swapping two fronts of a sound partition breaks it
  FrontSet swapped = support::nine_in_four();
  std::swap(swapped.fronts()[1], swapped.fronts()[2]);
  CHECK_FALSE(validate(swapped).empty());
}

TEST_CASE("validate agrees with the naive level computation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    auto pop = support::random_population(rng, 1 + rng() % 20, 2 + rng() % 2, 5);
    const auto levels = support::brute_levels(pop);
    std::vector<Front> fronts(levels.size());
    for (const auto& s : pop) {
      for (std::size_t k = 0; k < levels.size(); ++k) {
        if (levels[k].contains(s.id)) fronts[k].push_back(s);
      }
    }
    FrontSet good(pop.front().dimension(), fronts);
    REQUIRE(validate(good).empty());
    if (fronts.size() >= 2 && !fronts.back().empty()) {
      // demote a top-level solution: no longer a valid partition
      fronts.back().push_back(fronts.front().front());
      fronts.front().erase(fronts.front().begin());
      if (fronts.front().empty()) fronts.erase(fronts.begin());
      FrontSet bad(pop.front().dimension(), fronts);
      REQUIRE_FALSE(validate(bad).empty());
    }
  }
}
