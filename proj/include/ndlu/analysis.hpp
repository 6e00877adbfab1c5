// Worst-case comparison counts and deterministic scenario generators.
//
// The max_comp_* functions evaluate the worst-case count for a given front
// profile n_1..n_K: the comparisons needed to locate an incoming solution
// that dominates all but one member of F_1, plus the cascade
// (n_1 - 1) n_2 + ... + (n_{K-1} - 1) n_K where every cascade step compares
// the whole lower front against the whole displaced set.

#ifndef NDLU_ANALYSIS_HPP
#define NDLU_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ndlu/core.hpp"
#include "ndlu/dbst.hpp"

namespace ndlu {

/// Front sizes n_1..n_K, all positive.
class FrontProfile {
 public:
  /// Throws std::invalid_argument on an empty profile or a zero size.
  explicit FrontProfile(std::vector<std::uint64_t> sizes);

  const std::vector<std::uint64_t>& sizes() const noexcept { return sizes_; }
  std::size_t fronts() const noexcept { return sizes_.size(); }
  std::uint64_t population() const noexcept;
  /// n_k for 1-based rank k.
  std::uint64_t at(std::size_t rank) const { return sizes_.at(rank - 1); }

 private:
  std::vector<std::uint64_t> sizes_;
};

/// (n_1 - 1) n_2 + ... + (n_{K-1} - 1) n_K
std::uint64_t cascade_sum(const FrontProfile& p);

/// n_1 + cascade_sum(p)
std::uint64_t max_comp_linear(const FrontProfile& p);

/// Ranks mid, mid/2, mid/4, ... (h = floor(log2 K) halvings) rounded with the
/// variant's rounding, starting from mid = midpoint(1, K). Ranks below 1 and
/// repeats are dropped.
std::vector<std::size_t> halving_chain(std::size_t fronts, TreeVariant variant);

/// Sum of n_r over halving_chain(K, LeftBalanced) plus cascade_sum(p).
/// Exact at the two-front optimum; for other profiles an upper-envelope
/// estimate, instrumented runs are the ground truth there.
std::uint64_t max_comp_left_tree(const FrontProfile& p);

/// As max_comp_left_tree with floor rounding.
std::uint64_t max_comp_right_tree(const FrontProfile& p);

/// Two-front profile maximizing max_comp_linear: (N/2 + 1, N/2 - 1) for even
/// N, (ceil(N/2), floor(N/2)) for odd N. Requires N >= 3.
FrontProfile worst_two_front_profile(std::uint64_t n);

/// Closed forms at that optimum.
std::uint64_t worst_linear_closed_form(std::uint64_t n);      ///< N^2/4 + 1 or ceil(N^2/4)
std::uint64_t worst_left_tree_closed_form(std::uint64_t n);   ///< N^2/4 + N/2 (+ 1/4 for odd N)
std::uint64_t worst_right_tree_closed_form(std::uint64_t n);  ///< same as linear

struct ProfileSearch {
  std::uint64_t best = 0;
  std::vector<std::vector<std::uint64_t>> maximizers;
  std::uint64_t profiles = 0;  ///< compositions visited, 2^(N-1)
};

/// Exhaustive maximization of max_comp_linear over every composition of N.
ProfileSearch maximize_linear_over_profiles(std::uint64_t n);

/// N solutions where solution i dominates solution j for i < j; one front
/// per solution. Ids are "s1".."sN".
std::vector<Solution> gen_chain(std::size_t n, std::size_t m);

/// N mutually non-dominated solutions (i, N - i, 0, ...).
std::vector<Solution> gen_antichain(std::size_t n, std::size_t m);

/// K fronts of N/K solutions each; every solution of a front dominates every
/// solution of the next one. Throws std::invalid_argument unless K divides N.
std::vector<Solution> gen_equal_fronts(std::size_t n, std::size_t k, std::size_t m);

struct WorstCaseInstance {
  std::vector<Solution> population;  ///< F_1 members first, then F_2
  Solution probe;
  FrontProfile profile;
};

/// Two-front instance at worst_two_front_profile(N) with a probe that is
/// non-dominated with F_1's first member, dominates the rest of F_1 and is
/// non-dominated with all of F_2. Every F_2 member is dominated only by F_1's
/// first member, so the cascade compares all of F_2 against all displaced
/// solutions. Requires N >= 4.
WorstCaseInstance gen_worst_two_front(std::size_t n, std::size_t m);

}  // namespace ndlu

#endif  // NDLU_ANALYSIS_HPP
