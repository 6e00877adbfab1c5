// Linear-scan non-domination level update with O(1) auxiliary space:
// insertion, deletion and the two cascade procedures that restore the front
// invariants afterwards. A solution is moved, never copied, between fronts
// and accumulators, so it occupies exactly one place at every step.

#ifndef NDLU_LINEAR_HPP
#define NDLU_LINEAR_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ndlu/core.hpp"

namespace ndlu {

/// Location of a stored solution; both indices are 1-based.
struct Position {
  std::size_t front = 0;
  std::size_t index = 0;

  friend bool operator==(const Position&, const Position&) = default;
};

/// How delete finds the solution to remove.
enum class LocateStrategy {
  Sequential,  ///< scan fronts in rank order
  LeftTree,    ///< dominance tree lookup, ceil midpoints
  RightTree,   ///< dominance tree lookup, floor midpoints
};

/// Inserts `incoming` by scanning fronts from rank 1 until its level is
/// found, then cascades displaced solutions downwards.
///
/// Comparisons against a front stop at the first dominating or dominated
/// witness, so counter values are reproducible for a given front order.
void insert_linear(FrontSet& fs, Solution incoming, Counter& counter);

/// Moves every member of `front` from 1-based position `start` onwards that
/// `incoming` dominates into `dominated`, keeping survivor order.
void dom_set(Front& front, const Solution& incoming, std::size_t start,
             std::vector<Solution>& dominated, Counter& counter);

/// Places the mutually non-dominated set `displaced` at 1-based rank `index`
/// (2 <= index <= K+1). Members of F_index that none of `displaced`
/// dominates join it; the rest cascade to index+1. When nothing joins, all
/// fronts from `index` on move down one rank.
void update_insert(FrontSet& fs, std::vector<Solution> displaced, std::size_t index,
                   Counter& counter);

/// First stored solution identical to `sol`, scanning fronts in rank order.
std::optional<Position> locate_sequential(const FrontSet& fs, const Solution& sol,
                                          Counter& counter);

/// Removes the stored solution with `sol`'s id and objective vector, then
/// promotes solutions from lower fronts as needed.
/// Throws MissingSolutionError when no such solution is stored.
void remove(FrontSet& fs, const Solution& sol, LocateStrategy strategy, Counter& counter);

/// remove() for the stored solution with the given id. The id lookup itself
/// costs no comparisons.
void remove_id(FrontSet& fs, std::string_view id, LocateStrategy strategy, Counter& counter);

/// Promotes members of F_{index+1} that are non-dominated with the first
/// |F_index| members of F_index, recursing downwards while promotions leave
/// the lower front partially emptied. Requires 1 <= index < K.
void update_delete(FrontSet& fs, std::size_t index, Counter& counter);

namespace detail {

/// `incoming` dominates F_rank[witness] (0-based): collect everything in
/// that front it dominates, put it there, and cascade the collected set.
void settle_dominating(FrontSet& fs, std::size_t rank, std::size_t witness, Solution incoming,
                       Counter& counter);

void update_insert_from(FrontSet& fs, std::vector<Solution> displaced, std::size_t rank,
                        Counter& counter);

void update_delete_from(FrontSet& fs, std::size_t rank, Counter& counter);

#ifdef NDLU_CHECK_INVARIANTS
/// Throws ContractError when an id is held by two places at once.
void check_disjoint(const FrontSet& fs, const std::vector<Solution>& pending,
                    const Solution* held = nullptr);
#define NDLU_CHECK_DISJOINT(...) ::ndlu::detail::check_disjoint(__VA_ARGS__)
#else
#define NDLU_CHECK_DISJOINT(...) ((void)0)
#endif

}  // namespace detail

}  // namespace ndlu

#endif  // NDLU_LINEAR_HPP
