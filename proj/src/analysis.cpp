#include "ndlu/analysis.hpp"

#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ndlu {

FrontProfile::FrontProfile(std::vector<std::uint64_t> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) throw std::invalid_argument("front profile needs at least one front");
  for (auto n : sizes_) {
    if (n == 0) throw std::invalid_argument("front sizes must be positive");
  }
}

std::uint64_t FrontProfile::population() const noexcept {
  return std::accumulate(sizes_.begin(), sizes_.end(), std::uint64_t{0});
}

std::uint64_t cascade_sum(const FrontProfile& p) {
  const auto& n = p.sizes();
  std::uint64_t sum = 0;
  for (std::size_t k = 1; k < n.size(); ++k) sum += (n[k - 1] - 1) * n[k];
  return sum;
}

std::uint64_t max_comp_linear(const FrontProfile& p) { return p.at(1) + cascade_sum(p); }

std::vector<std::size_t> halving_chain(std::size_t fronts, TreeVariant variant) {
  std::vector<std::size_t> chain;
  if (fronts == 0) return chain;
  const std::size_t mid = midpoint(1, fronts, variant);
  const int h = std::bit_width(fronts) - 1;
  for (int j = 0; j <= h; ++j) {
    const std::size_t step = std::size_t{1} << j;
    const std::size_t r =
        variant == TreeVariant::LeftBalanced ? (mid + step - 1) / step : mid / step;
    if (r == 0) break;
    if (!chain.empty() && chain.back() == r) continue;
    chain.push_back(r);
  }
  return chain;
}

namespace {

std::uint64_t chain_sum(const FrontProfile& p, TreeVariant variant) {
  std::uint64_t sum = 0;
  for (auto r : halving_chain(p.fronts(), variant)) sum += p.at(r);
  return sum;
}

}  // namespace

std::uint64_t max_comp_left_tree(const FrontProfile& p) {
  return chain_sum(p, TreeVariant::LeftBalanced) + cascade_sum(p);
}

std::uint64_t max_comp_right_tree(const FrontProfile& p) {
  return chain_sum(p, TreeVariant::RightBalanced) + cascade_sum(p);
}

FrontProfile worst_two_front_profile(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("two-front optimum needs N >= 3");
  const std::uint64_t first = n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2;
  return FrontProfile({first, n - first});
}

std::uint64_t worst_linear_closed_form(std::uint64_t n) {
  return n % 2 == 0 ? n * n / 4 + 1 : (n * n + 3) / 4;
}

std::uint64_t worst_left_tree_closed_form(std::uint64_t n) {
  return n % 2 == 0 ? n * n / 4 + n / 2 : (n + 1) * (n + 1) / 4;
}

std::uint64_t worst_right_tree_closed_form(std::uint64_t n) { return worst_linear_closed_form(n); }

namespace {

struct CompositionWalk {
  std::uint64_t n;
  ProfileSearch result;
  std::vector<std::uint64_t> path;

  void visit(std::uint64_t remaining, std::uint64_t value) {
    if (remaining == 0) {
      ++result.profiles;
      if (value > result.best) {
        result.best = value;
        result.maximizers.clear();
      }
      if (value == result.best) result.maximizers.push_back(path);
      return;
    }
    for (std::uint64_t next = 1; next <= remaining; ++next) {
      const std::uint64_t gain = path.empty() ? next : (path.back() - 1) * next;
      path.push_back(next);
      visit(remaining - next, value + gain);
      path.pop_back();
    }
  }
};

}  // namespace

ProfileSearch maximize_linear_over_profiles(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("population must be non-empty");
  CompositionWalk walk{n, {}, {}};
  walk.path.reserve(n);
  walk.visit(n, 0);
  return std::move(walk.result);
}

namespace {

Solution make(std::size_t id, std::vector<double> head, std::size_t m, double pad) {
  head.resize(std::max<std::size_t>(m, 2), pad);
  return Solution("s" + std::to_string(id), std::move(head));
}

}  // namespace

std::vector<Solution> gen_chain(std::size_t n, std::size_t m) {
  std::vector<Solution> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto v = static_cast<double>(i);
    out.push_back(make(i, std::vector<double>(m, v), m, v));
  }
  return out;
}

std::vector<Solution> gen_antichain(std::size_t n, std::size_t m) {
  std::vector<Solution> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) {
    out.push_back(make(i, {static_cast<double>(i), static_cast<double>(n - i)}, m, 0.0));
  }
  return out;
}

std::vector<Solution> gen_equal_fronts(std::size_t n, std::size_t k, std::size_t m) {
  if (k == 0 || n % k != 0) {
    throw std::invalid_argument("equal fronts need K dividing N (N=" + std::to_string(n) +
                                ", K=" + std::to_string(k) + ")");
  }
  const std::size_t width = n / k;
  std::vector<Solution> out;
  out.reserve(n);
  for (std::size_t f = 1; f <= k; ++f) {
    // every coordinate of front f lies in [f(w+1)+1, f(w+1)+w]
    const double base = static_cast<double>(f * (width + 1));
    for (std::size_t j = 1; j <= width; ++j) {
      out.push_back(make((f - 1) * width + j,
                         {base + static_cast<double>(j), base + static_cast<double>(width + 1 - j)},
                         m, static_cast<double>(f)));
    }
  }
  return out;
}

WorstCaseInstance gen_worst_two_front(std::size_t n, std::size_t m) {
  if (n < 4) throw std::invalid_argument("worst-case instance needs N >= 4");
  FrontProfile profile = worst_two_front_profile(n);
  const auto n1 = static_cast<std::size_t>(profile.at(1));
  const auto n2 = static_cast<std::size_t>(profile.at(2));
  const double d1 = static_cast<double>(n1);
  const double d2 = static_cast<double>(n2 + 1);

  std::vector<Solution> pop;
  pop.reserve(n);
  std::size_t id = 0;
  // F_1: the anchor, then n1 - 1 members the probe dominates
  pop.push_back(make(++id, {0.0, 2.0}, m, 0.0));
  for (std::size_t i = 1; i < n1; ++i) {
    const double t = static_cast<double>(i);
    pop.push_back(make(++id, {2.0 + t / d1, 1.0 + (d1 - t) / d1}, m, 0.0));
  }
  // F_2: dominated by the anchor only
  for (std::size_t j = 1; j <= n2; ++j) {
    const double t = static_cast<double>(j) / d2;
    pop.push_back(make(++id, {t, 4.0 - t}, m, 0.0));
  }
  std::vector<double> probe{2.0, 1.0};
  probe.resize(std::max<std::size_t>(m, 2), 0.0);
  return {std::move(pop), Solution("probe", std::move(probe)), std::move(profile)};
}

}  // namespace ndlu
