#include "ndlu/online.hpp"

namespace ndlu {

std::string_view to_string(Approach a) noexcept {
  switch (a) {
    case Approach::Linear:
      return "linear";
    case Approach::LeftTree:
      return "ltree";
    case Approach::RightTree:
      return "rtree";
  }
  return "?";
}

std::optional<Approach> parse_approach(std::string_view name) noexcept {
  if (name == "linear") return Approach::Linear;
  if (name == "ltree") return Approach::LeftTree;
  if (name == "rtree") return Approach::RightTree;
  return std::nullopt;
}

namespace {

LocateStrategy strategy_for(Approach a) {
  switch (a) {
    case Approach::LeftTree:
      return LocateStrategy::LeftTree;
    case Approach::RightTree:
      return LocateStrategy::RightTree;
    case Approach::Linear:
      break;
  }
  return LocateStrategy::Sequential;
}

}  // namespace

void insert(FrontSet& fs, Solution incoming, Approach approach, Counter& counter) {
  switch (approach) {
    case Approach::Linear:
      insert_linear(fs, std::move(incoming), counter);
      return;
    case Approach::LeftTree:
      insert_tree(fs, std::move(incoming), TreeVariant::LeftBalanced, counter);
      return;
    case Approach::RightTree:
      insert_tree(fs, std::move(incoming), TreeVariant::RightBalanced, counter);
      return;
  }
}

void remove(FrontSet& fs, std::string_view id, Approach approach, Counter& counter) {
  remove_id(fs, id, strategy_for(approach), counter);
}

std::optional<Position> locate(const FrontSet& fs, const Solution& sol, Approach approach,
                               Counter& counter) {
  switch (approach) {
    case Approach::LeftTree:
      return lookup_tree(fs, sol, counter, TreeVariant::LeftBalanced);
    case Approach::RightTree:
      return lookup_tree(fs, sol, counter, TreeVariant::RightBalanced);
    case Approach::Linear:
      break;
  }
  return locate_sequential(fs, sol, counter);
}

FrontSet sort_online(std::span<const Solution> stream, Approach approach, Counter& counter) {
  FrontSet fs;
  for (const auto& s : stream) insert(fs, s, approach, counter);
  return fs;
}

}  // namespace ndlu
