// Test-only helpers. The level computation here is deliberately naive and
// shares nothing with the library: a solution's level is one more than the
// deepest level among the solutions dominating it.

#ifndef NDLU_TESTS_SUPPORT_HPP
#define NDLU_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ndlu/core.hpp"

namespace support {

using Levels = std::vector<std::set<std::string>>;

inline bool dominates(const std::vector<double>& a, const std::vector<double>& b) {
  bool better = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) better = true;
  }
  return better;
}

inline Levels brute_levels(const std::vector<ndlu::Solution>& pop) {
  const std::size_t n = pop.size();
  std::vector<std::size_t> level(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (dominates(pop[j].objectives, pop[i].objectives) && level[i] <= level[j]) {
          level[i] = level[j] + 1;
          changed = true;
        }
      }
    }
  }
  Levels out;
  for (std::size_t i = 0; i < n; ++i) {
    if (out.size() < level[i]) out.resize(level[i]);
    out[level[i] - 1].insert(pop[i].id);
  }
  return out;
}

inline Levels levels_of(const ndlu::FrontSet& fs) {
  Levels out;
  for (const auto& f : fs.fronts()) {
    std::set<std::string> ids;
    for (const auto& s : f) ids.insert(s.id);
    out.push_back(std::move(ids));
  }
  return out;
}

/// Builds a FrontSet verbatim, without sorting anything.
inline ndlu::FrontSet build(const std::vector<std::vector<std::pair<std::string, std::vector<double>>>>& fronts) {
  std::vector<ndlu::Front> out;
  std::size_t m = 0;
  for (const auto& f : fronts) {
    ndlu::Front front;
    for (const auto& [id, v] : f) {
      front.emplace_back(id, v);
      m = v.size();
    }
    out.push_back(std::move(front));
  }
  return ndlu::FrontSet(m, std::move(out));
}

/// Twelve solutions in five fronts of widths 1, 2, 4, 4, 1: member j of a
/// front of width w at level k is (10k + j, 10k + w + 1 - j).
inline std::vector<ndlu::Solution> twelve_in_five() {
  const std::size_t widths[] = {1, 2, 4, 4, 1};
  std::vector<ndlu::Solution> out;
  int id = 0;
  for (std::size_t k = 1; k <= 5; ++k) {
    const double w = static_cast<double>(widths[k - 1]);
    for (std::size_t j = 1; j <= widths[k - 1]; ++j) {
      const double base = 10.0 * static_cast<double>(k);
      out.emplace_back(std::to_string(++id),
                       std::vector<double>{base + static_cast<double>(j), base + w + 1 - static_cast<double>(j)});
    }
  }
  return out;
}

/// Nine solutions in four fronts; deleting "4" from F_3 promotes 5 and 9.
inline ndlu::FrontSet nine_in_four() {
  return build({{{"2", {1, 1}}},
                {{"1", {2, 6}}, {"3", {3, 4}}, {"6", {6, 2}}},
                {{"4", {4, 5}}, {"8", {7, 3}}},
                {{"5", {5, 6}}, {"7", {8, 4}}, {"9", {4.5, 8}}}});
}

/// Random population over a small integer grid, ids "r0".."r{n-1}".
inline std::vector<ndlu::Solution> random_population(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                                     std::uint64_t range) {
  std::vector<ndlu::Solution> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> v;
    for (std::size_t k = 0; k < m; ++k) v.push_back(static_cast<double>(rng() % range));
    out.emplace_back("r" + std::to_string(i), std::move(v));
  }
  return out;
}

}  // namespace support

#endif  // NDLU_TESTS_SUPPORT_HPP
