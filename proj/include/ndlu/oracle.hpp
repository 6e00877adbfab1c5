// Reference non-dominated sort used to check every incremental result.

#ifndef NDLU_ORACLE_HPP
#define NDLU_ORACLE_HPP

#include <span>

#include "ndlu/core.hpp"

namespace ndlu {

/// Canonical level partition of `population`: F_1 is its non-dominated set,
/// F_{k+1} the non-dominated set of what remains. Within a front solutions
/// keep their input order.
///
/// Every unordered pair is compared exactly once, N(N-1)/2 comparisons in
/// total, tallied into `counter` when given. Throws DuplicateIdError and
/// DimensionError.
FrontSet full_sort(std::span<const Solution> population, Counter* counter = nullptr);

/// Equal front count and, level by level, equal sets of ids.
bool same_partition(const FrontSet& a, const FrontSet& b);

}  // namespace ndlu

#endif  // NDLU_ORACLE_HPP
