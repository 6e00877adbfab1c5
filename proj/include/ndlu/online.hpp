// One entry point per update approach, so drivers can switch between the
// linear scan and the two tree variants with a flag.

#ifndef NDLU_ONLINE_HPP
#define NDLU_ONLINE_HPP

#include <optional>
#include <span>
#include <string_view>

#include "ndlu/core.hpp"
#include "ndlu/dbst.hpp"
#include "ndlu/linear.hpp"

namespace ndlu {

enum class Approach {
  Linear,     ///< insert_linear, sequential lookup
  LeftTree,   ///< insert_tree and lookup_tree, ceil midpoints
  RightTree,  ///< insert_tree and lookup_tree, floor midpoints
};

/// "linear", "ltree" or "rtree".
std::string_view to_string(Approach a) noexcept;
std::optional<Approach> parse_approach(std::string_view name) noexcept;

void insert(FrontSet& fs, Solution incoming, Approach approach, Counter& counter);

/// Removes the solution stored under `id`. Throws MissingSolutionError.
void remove(FrontSet& fs, std::string_view id, Approach approach, Counter& counter);

std::optional<Position> locate(const FrontSet& fs, const Solution& sol, Approach approach,
                               Counter& counter);

/// Inserts the stream one solution at a time in arrival order.
FrontSet sort_online(std::span<const Solution> stream, Approach approach, Counter& counter);

}  // namespace ndlu

#endif  // NDLU_ONLINE_HPP
