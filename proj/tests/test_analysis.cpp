#include <doctest.h>

#include <random>

#include "ndlu/analysis.hpp"
#include "ndlu/online.hpp"
#include "ndlu/oracle.hpp"
#include "support.hpp"

using namespace ndlu;

namespace {

// max over the profile evaluated straight from the definition, by recursion
// over the size of the first front
std::uint64_t naive_best(std::uint64_t n, std::uint64_t prev, bool first) {
  if (n == 0) return 0;
  std::uint64_t best = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const std::uint64_t gain = first ? k : (prev - 1) * k;
    best = std::max(best, gain + naive_best(n - k, k, false));
  }
  return best;
}

std::uint64_t insert_cost(FrontSet fs, const Solution& probe, Approach a) {
  Counter c;
  insert(fs, probe, a, c);
  return c.pair_compares;
}

}  // namespace

TEST_CASE("front profile") {
  const FrontProfile p({3, 2, 4});
  CHECK(p.fronts() == 3);
  CHECK(p.population() == 9);
  CHECK(p.at(3) == 4);
  CHECK_THROWS_AS(FrontProfile({}), std::invalid_argument);
  CHECK_THROWS_AS(FrontProfile({2, 0}), std::invalid_argument);
}

TEST_CASE("profile formulas on hand-checked profiles") {
  const FrontProfile p({3, 2, 4});
  CHECK(cascade_sum(p) == 2 * 2 + 1 * 4);
  CHECK(max_comp_linear(p) == 3 + 8);
  CHECK(max_comp_linear(FrontProfile({51, 49})) == 2501);
  CHECK(max_comp_left_tree(FrontProfile({51, 49})) == 2550);
  CHECK(max_comp_right_tree(FrontProfile({51, 49})) == 2501);
  CHECK(max_comp_linear(FrontProfile({7})) == 7);
}

TEST_CASE("halving chains") {
  using V = std::vector<std::size_t>;
  CHECK(halving_chain(2, TreeVariant::LeftBalanced) == V{2, 1});
  CHECK(halving_chain(2, TreeVariant::RightBalanced) == V{1});
  CHECK(halving_chain(1, TreeVariant::LeftBalanced) == V{1});
  CHECK(halving_chain(100, TreeVariant::LeftBalanced) == V{51, 26, 13, 7, 4, 2, 1});
  CHECK(halving_chain(100, TreeVariant::RightBalanced) == V{50, 25, 12, 6, 3, 1});
  CHECK(halving_chain(0, TreeVariant::RightBalanced).empty());
}

TEST_CASE("closed forms") {
  CHECK(worst_linear_closed_form(100) == 2501);
  CHECK(worst_linear_closed_form(101) == 2551);
  CHECK(worst_left_tree_closed_form(100) == 2550);
  CHECK(worst_left_tree_closed_form(101) == 2601);
  CHECK(worst_right_tree_closed_form(100) == 2501);
  for (std::uint64_t n = 3; n <= 200; ++n) {
    const auto p = worst_two_front_profile(n);
    REQUIRE(p.population() == n);
    REQUIRE(max_comp_linear(p) == worst_linear_closed_form(n));
    REQUIRE(max_comp_left_tree(p) == worst_left_tree_closed_form(n));
    REQUIRE(max_comp_right_tree(p) == worst_right_tree_closed_form(n));
  }
  CHECK_THROWS_AS(worst_two_front_profile(2), std::invalid_argument);
}

TEST_CASE("profile search agrees with the recursive maximum") {
  for (std::uint64_t n = 1; n <= 14; ++n) {
    const auto s = maximize_linear_over_profiles(n);
    CAPTURE(n);
    REQUIRE(s.best == naive_best(n, 0, true));
    REQUIRE(s.profiles == (std::uint64_t{1} << (n - 1)));
    for (const auto& m : s.maximizers) REQUIRE(max_comp_linear(FrontProfile(m)) == s.best);
  }
  const auto ten = maximize_linear_over_profiles(10);
  REQUIRE(ten.maximizers.size() == 1);
  CHECK(ten.maximizers.front() == std::vector<std::uint64_t>{6, 4});
  CHECK_THROWS_AS(maximize_linear_over_profiles(0), std::invalid_argument);
}

TEST_CASE("generators produce their declared structure") {
  for (std::size_t n : {1u, 2u, 7u, 30u}) {
    for (std::size_t m : {2u, 3u, 5u}) {
      const auto chain = gen_chain(n, m);
      REQUIRE(support::brute_levels(chain).size() == n);
      REQUIRE(chain.back().id == "s" + std::to_string(n));
      const auto anti = gen_antichain(n, m);
      REQUIRE(support::brute_levels(anti).size() == 1);
    }
  }
  const auto eq = gen_equal_fronts(12, 4, 3);
  const auto levels = support::brute_levels(eq);
  REQUIRE(levels.size() == 4);
  for (const auto& l : levels) CHECK(l.size() == 3);
  CHECK(support::brute_levels(gen_equal_fronts(5, 5, 2)).size() == 5);
  CHECK(support::brute_levels(gen_equal_fronts(5, 1, 2)).size() == 1);
  CHECK_THROWS_AS(gen_equal_fronts(10, 3, 2), std::invalid_argument);
  CHECK_THROWS_AS(gen_equal_fronts(10, 0, 2), std::invalid_argument);

  // every solution of a front dominates every solution of the next
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    for (const auto& a : eq) {
      for (const auto& b : eq) {
        if (levels[k].contains(a.id) && levels[k + 1].contains(b.id)) {
          REQUIRE(support::dominates(a.objectives, b.objectives));
        }
      }
    }
  }
}

TEST_CASE("worst-case instance shape") {
  for (std::size_t n : {4u, 5u, 10u, 101u}) {
    const auto inst = gen_worst_two_front(n, 3);
    const auto levels = support::brute_levels(inst.population);
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].size() == inst.profile.at(1));
    CHECK(levels[1].size() == inst.profile.at(2));
    // the probe is blocked by F_1's first member only and beats the rest of F_1
    const auto& first = inst.population.front();
    CHECK_FALSE(support::dominates(first.objectives, inst.probe.objectives));
    CHECK_FALSE(support::dominates(inst.probe.objectives, first.objectives));
    for (std::size_t i = 1; i < inst.profile.at(1); ++i) {
      CHECK(support::dominates(inst.probe.objectives, inst.population[i].objectives));
    }
  }
  CHECK_THROWS_AS(gen_worst_two_front(3, 2), std::invalid_argument);
}

TEST_CASE("instrumented worst-case inserts equal the formulas") {
  for (std::size_t n = 4; n <= 80; ++n) {
    const auto inst = gen_worst_two_front(n, 2);
    const FrontSet fs = full_sort(inst.population);
    CAPTURE(n);
    REQUIRE(insert_cost(fs, inst.probe, Approach::Linear) == max_comp_linear(inst.profile));
    REQUIRE(insert_cost(fs, inst.probe, Approach::LeftTree) == max_comp_left_tree(inst.profile));
    REQUIRE(insert_cost(fs, inst.probe, Approach::RightTree) == max_comp_right_tree(inst.profile));
  }
}

TEST_CASE("linear worst case on arbitrary profiles stays within the formula") {
  // An instance realising the profile bound exactly needs special structure;
  // on random populations the instrumented count is an upper-bounded quantity.
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto pop = support::random_population(rng, 2 + rng() % 40, 2, 1 + rng() % 9);
    const FrontSet fs = full_sort(pop);
    std::vector<std::uint64_t> sizes;
    for (auto s : fs.profile()) sizes.push_back(s);
    const FrontProfile p(sizes);
    auto probe = support::random_population(rng, 1, 2, 10).front();
    probe.id = "probe";
    REQUIRE(insert_cost(fs, probe, Approach::Linear) <= max_comp_linear(p) + p.population());
  }
}
