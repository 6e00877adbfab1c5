#include "ndlu/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

namespace ndlu {

FrontSet full_sort(std::span<const Solution> population, Counter* counter) {
  if (population.empty()) return FrontSet{};
  const std::size_t n = population.size();
  const std::size_t m = population.front().dimension();

  std::unordered_set<std::string_view> ids;
  for (const auto& s : population) {
    if (!ids.insert(s.id).second) throw DuplicateIdError("duplicate solution id '" + s.id + "'");
    if (s.dimension() != m) {
      throw DimensionError("solution '" + s.id + "' has " + std::to_string(s.dimension()) +
                           " objectives, expected " + std::to_string(m));
    }
  }

  // Dominance edges in compressed rows: dominated[first[p] .. first[p+1]).
  std::vector<std::size_t> dominator_count(n, 0);
  std::vector<std::size_t> out_degree(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto r = relation(population[i].objectives, population[j].objectives);
      if (r == DomRelation::Dominates) {
        edges.emplace_back(i, j);
      } else if (r == DomRelation::DominatedBy) {
        edges.emplace_back(j, i);
      }
    }
  }
  if (counter != nullptr) counter->pair_compares += n * (n - 1) / 2;
  for (const auto& [p, q] : edges) {
    ++out_degree[p];
    ++dominator_count[q];
  }
  std::vector<std::size_t> first(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) first[p + 1] = first[p] + out_degree[p];
  std::vector<std::size_t> dominated(edges.size());
  for (const auto& [p, q] : edges) dominated[first[p + 1] - out_degree[p]--] = q;

  std::vector<Front> fronts;
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < n; ++i) {
    if (dominator_count[i] == 0) current.push_back(i);
  }
  while (!current.empty()) {
    std::sort(current.begin(), current.end());
    Front f;
    f.reserve(current.size());
    std::vector<std::size_t> next;
    for (std::size_t p : current) {
      f.push_back(population[p]);
      for (std::size_t e = first[p]; e < first[p + 1]; ++e) {
        if (--dominator_count[dominated[e]] == 0) next.push_back(dominated[e]);
      }
    }
    fronts.push_back(std::move(f));
    current = std::move(next);
  }
  return FrontSet(m, std::move(fronts));
}

bool same_partition(const FrontSet& a, const FrontSet& b) {
  if (a.front_count() != b.front_count()) return false;
  for (std::size_t k = 0; k < a.front_count(); ++k) {
    const auto& fa = a.fronts()[k];
    const auto& fb = b.fronts()[k];
    if (fa.size() != fb.size()) return false;
    std::vector<std::string_view> ia;
    std::vector<std::string_view> ib;
    for (const auto& s : fa) ia.push_back(s.id);
    for (const auto& s : fb) ib.push_back(s.id);
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (ia != ib) return false;
  }
  return true;
}

}  // namespace ndlu
