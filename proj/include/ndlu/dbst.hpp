// Dominance binary search tree over the ordered front list.
//
// A node is a front; every front has lower dominance than its left subtree
// and higher dominance than its right subtree. The tree is never built: a
// node is the midpoint of a rank interval [lo, hi], so navigation is plain
// index bisection over FrontSet::fronts().

#ifndef NDLU_DBST_HPP
#define NDLU_DBST_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ndlu/core.hpp"
#include "ndlu/linear.hpp"

namespace ndlu {

enum class TreeVariant {
  LeftBalanced,   ///< mid = ceil((lo + hi) / 2)
  RightBalanced,  ///< mid = floor((lo + hi) / 2)
};

/// Root rank of the interval [lo, hi] for the given variant.
constexpr std::size_t midpoint(std::size_t lo, std::size_t hi, TreeVariant variant) noexcept {
  return variant == TreeVariant::LeftBalanced ? (lo + hi + 1) / 2 : (lo + hi) / 2;
}

/// Outcome of comparing the incoming solution against one tree node.
struct CmpRecord {
  int dom = 0;            ///< 1 dominates, -1 dominated, 0 non-dominated with the whole front
  std::size_t front = 0;  ///< 1-based rank of the node
  std::size_t index = 0;  ///< 1-based witness position, 0 when dom == 0

  friend bool operator==(const CmpRecord&, const CmpRecord&) = default;
};

/// Root-to-leaf comparison trace for `incoming`. Holds at most
/// floor(log2 K) + 1 records. Requires K >= 2 (ContractError otherwise).
std::vector<CmpRecord> navigate(const FrontSet& fs, const Solution& incoming, TreeVariant variant,
                                Counter& counter);

/// Inserts `incoming` at the level found by navigate(); single-front sets go
/// through insert_linear. The resulting partition is the same as
/// insert_linear's.
void insert_tree(FrontSet& fs, Solution incoming, TreeVariant variant, Counter& counter);

/// Finds a stored solution identical to `sol` by bisection over the fronts
/// using check_dom.
std::optional<Position> lookup_tree(const FrontSet& fs, const Solution& sol, Counter& counter,
                                    TreeVariant variant = TreeVariant::LeftBalanced);

}  // namespace ndlu

#endif  // NDLU_DBST_HPP
