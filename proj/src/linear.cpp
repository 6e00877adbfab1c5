#include "ndlu/linear.hpp"

#include <algorithm>
#include <unordered_set>

#include "ndlu/dbst.hpp"

namespace ndlu {

namespace {

// Single stable sweep replacing the remove-and-step-back loop: members from
// `start` on that `incoming` dominates go to `out`, the rest stay in order.
void sweep_dominated(Front& front, const Solution& incoming, std::size_t start,
                     std::vector<Solution>& out, Counter& counter) {
  auto keep = front.begin() + static_cast<std::ptrdiff_t>(start);
  for (auto it = keep; it != front.end(); ++it) {
    if (dom_nature(incoming, *it, counter) == 1) {
      out.push_back(std::move(*it));
    } else {
      if (keep != it) *keep = std::move(*it);
      ++keep;
    }
  }
  front.erase(keep, front.end());
}

// True when `x` is non-dominated with each of the first `l` members of `set`.
// Always performs exactly `l` comparisons.
bool nondominated_with_prefix(const Solution& x, const std::vector<Solution>& set, std::size_t l,
                              Counter& counter, bool set_first) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < l; ++j) {
    int d = set_first ? dom_nature(set[j], x, counter) : dom_nature(x, set[j], counter);
    if (d == 0) ++count;
  }
  return count == l;
}

void check_objectives(const FrontSet& fs, const Solution& s) {
  if (fs.objectives() != 0 && s.dimension() != fs.objectives()) {
    throw DimensionError("solution '" + s.id + "' has " + std::to_string(s.dimension()) +
                         " objectives, front set has " + std::to_string(fs.objectives()));
  }
}

}  // namespace

namespace detail {

#ifdef NDLU_CHECK_INVARIANTS
void check_disjoint(const FrontSet& fs, const std::vector<Solution>& pending, const Solution* held) {
  std::unordered_set<std::string_view> seen;
  auto claim = [&seen](const Solution& s) {
    if (!seen.insert(s.id).second) throw ContractError("id '" + s.id + "' held in two places");
  };
  for (const auto& f : fs.fronts()) {
    for (const auto& s : f) claim(s);
  }
  for (const auto& s : pending) claim(s);
  if (held != nullptr) claim(*held);
}
#endif

void update_insert_from(FrontSet& fs, std::vector<Solution> displaced, std::size_t rank,
                        Counter& counter) {
  auto& fronts = fs.fronts();
  for (;;) {
    if (rank == fronts.size()) {
      fronts.push_back(std::move(displaced));
      return;
    }
    Front& target = fronts[rank];
    const std::size_t l = displaced.size();
    auto keep = target.begin();
    for (auto it = target.begin(); it != target.end(); ++it) {
      if (nondominated_with_prefix(*it, displaced, l, counter, true)) {
        displaced.push_back(std::move(*it));
      } else {
        if (keep != it) *keep = std::move(*it);
        ++keep;
      }
    }
    target.erase(keep, target.end());
    NDLU_CHECK_DISJOINT(fs, displaced);

    if (displaced.size() == l) {
      fronts.insert(fronts.begin() + static_cast<std::ptrdiff_t>(rank), std::move(displaced));
      return;
    }
    if (target.empty()) {
      target = std::move(displaced);
      return;
    }
    Front rest = std::move(target);
    target = std::move(displaced);
    displaced = std::move(rest);
    ++rank;
  }
}

void settle_dominating(FrontSet& fs, std::size_t rank, std::size_t witness, Solution incoming,
                       Counter& counter) {
  auto& fronts = fs.fronts();
  Front& f = fronts[rank];
  std::vector<Solution> dominated;
  dominated.push_back(std::move(f[witness]));
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(witness));
  sweep_dominated(f, incoming, witness, dominated, counter);
  f.push_back(std::move(incoming));
  NDLU_CHECK_DISJOINT(fs, dominated);

  if (rank + 1 == fronts.size()) {
    fronts.push_back(std::move(dominated));
  } else if (f.size() == 1) {
    // incoming dominated the whole front: every lower front moves down as is
    fronts.insert(fronts.begin() + static_cast<std::ptrdiff_t>(rank + 1), std::move(dominated));
  } else {
    update_insert_from(fs, std::move(dominated), rank + 1, counter);
  }
}

void update_delete_from(FrontSet& fs, std::size_t rank, Counter& counter) {
  auto& fronts = fs.fronts();
  while (rank + 1 < fronts.size()) {
    Front& upper = fronts[rank];
    Front& lower = fronts[rank + 1];
    const std::size_t l = upper.size();
    auto keep = lower.begin();
    for (auto it = lower.begin(); it != lower.end(); ++it) {
      if (nondominated_with_prefix(*it, upper, l, counter, false)) {
        upper.push_back(std::move(*it));
      } else {
        if (keep != it) *keep = std::move(*it);
        ++keep;
      }
    }
    lower.erase(keep, lower.end());
    NDLU_CHECK_DISJOINT(fs, {});

    if (lower.empty()) {
      fronts.erase(fronts.begin() + static_cast<std::ptrdiff_t>(rank + 1));
      return;
    }
    if (upper.size() == l) return;
    ++rank;
  }
}

}  // namespace detail

void insert_linear(FrontSet& fs, Solution incoming, Counter& counter) {
  fs.admit(incoming);
  auto& fronts = fs.fronts();
  for (std::size_t i = 0; i < fronts.size(); ++i) {
    Front& f = fronts[i];
    std::size_t count = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      int d = dom_nature(incoming, f[j], counter);
      if (d == 1) {
        detail::settle_dominating(fs, i, j, std::move(incoming), counter);
        return;
      }
      if (d == 0) {
        ++count;
      } else {
        break;
      }
    }
    if (count == f.size()) {
      f.push_back(std::move(incoming));
      return;
    }
  }
  fronts.push_back(Front{std::move(incoming)});
}

void dom_set(Front& front, const Solution& incoming, std::size_t start,
             std::vector<Solution>& dominated, Counter& counter) {
  if (start == 0) throw ContractError("dom_set: start position is 1-based");
  if (start > front.size()) return;
  sweep_dominated(front, incoming, start - 1, dominated, counter);
}

void update_insert(FrontSet& fs, std::vector<Solution> displaced, std::size_t index,
                   Counter& counter) {
  if (displaced.empty()) throw ContractError("update_insert: displaced set is empty");
  if (index < 2 || index > fs.front_count() + 1) {
    throw ContractError("update_insert: index " + std::to_string(index) + " outside [2, " +
                        std::to_string(fs.front_count() + 1) + "]");
  }
  for (std::size_t i = 0; i < displaced.size(); ++i) {
    check_objectives(fs, displaced[i]);
    if (fs.contains(displaced[i].id)) {
      throw ContractError("update_insert: '" + displaced[i].id + "' is already stored");
    }
    for (std::size_t j = i + 1; j < displaced.size(); ++j) {
      auto r = relation(displaced[i].objectives, displaced[j].objectives);
      if (r == DomRelation::Dominates || r == DomRelation::DominatedBy) {
        throw ContractError("update_insert: displaced set is not mutually non-dominated ('" +
                            displaced[i].id + "' vs '" + displaced[j].id + "')");
      }
    }
  }
  detail::update_insert_from(fs, std::move(displaced), index - 1, counter);
}

std::optional<Position> locate_sequential(const FrontSet& fs, const Solution& sol,
                                          Counter& counter) {
  const auto& fronts = fs.fronts();
  for (std::size_t k = 0; k < fronts.size(); ++k) {
    bool beaten = false;
    for (std::size_t i = 0; i < fronts[k].size(); ++i) {
      switch (check_dom(sol, fronts[k][i], counter)) {
        case DomRelation::Identical:
          return Position{k + 1, i + 1};
        case DomRelation::Dominates:
          // sol would rank above F_k, and earlier fronts were already searched
          return std::nullopt;
        case DomRelation::DominatedBy:
          beaten = true;
          break;
        case DomRelation::NonDominated:
          continue;
      }
      break;
    }
    // non-dominated with the whole front yet not stored in it
    if (!beaten) return std::nullopt;
  }
  return std::nullopt;
}

void remove(FrontSet& fs, const Solution& sol, LocateStrategy strategy, Counter& counter) {
  check_objectives(fs, sol);
  std::optional<Position> pos;
  switch (strategy) {
    case LocateStrategy::Sequential:
      pos = locate_sequential(fs, sol, counter);
      break;
    case LocateStrategy::LeftTree:
      pos = lookup_tree(fs, sol, counter, TreeVariant::LeftBalanced);
      break;
    case LocateStrategy::RightTree:
      pos = lookup_tree(fs, sol, counter, TreeVariant::RightBalanced);
      break;
  }
  if (!pos) throw MissingSolutionError("solution '" + sol.id + "' is not stored");

  auto& fronts = fs.fronts();
  const std::size_t rank = pos->front - 1;
  Front& f = fronts[rank];
  // Identical vectors share a front; pick the one carrying sol's id.
  std::size_t at = pos->index - 1;
  if (f[at].id != sol.id) {
    auto it = std::find_if(f.begin(), f.end(), [&](const Solution& s) { return s.id == sol.id; });
    if (it == f.end()) {
      throw MissingSolutionError("solution '" + sol.id + "' is not stored with these objectives");
    }
    at = static_cast<std::size_t>(it - f.begin());
  }
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(at));

  if (f.empty()) {
    // The next front was entirely dominated by the removed solution, hence
    // by F_{rank-1}: dropping the empty front renumbers everything correctly.
    fronts.erase(fronts.begin() + static_cast<std::ptrdiff_t>(rank));
    return;
  }
  if (rank + 1 < fronts.size()) detail::update_delete_from(fs, rank, counter);
}

void remove_id(FrontSet& fs, std::string_view id, LocateStrategy strategy, Counter& counter) {
  const Solution* stored = fs.find(id);
  if (stored == nullptr) throw MissingSolutionError("solution '" + std::string(id) + "' is not stored");
  Solution copy = *stored;
  remove(fs, copy, strategy, counter);
}

void update_delete(FrontSet& fs, std::size_t index, Counter& counter) {
  if (index < 1 || index >= fs.front_count()) {
    throw ContractError("update_delete: index " + std::to_string(index) + " outside [1, " +
                        std::to_string(fs.front_count()) + ")");
  }
  detail::update_delete_from(fs, index - 1, counter);
}

}  // namespace ndlu
