#include "ndlu/dbst.hpp"

namespace ndlu {

namespace {

// First witness in `front` that decides the relation with `incoming`, as a
// record; (0, rank, 0) when incoming is non-dominated with all of it.
CmpRecord probe_front(const Front& front, std::size_t rank, const Solution& incoming,
                      Counter& counter) {
  for (std::size_t i = 0; i < front.size(); ++i) {
    int d = dom_nature(incoming, front[i], counter);
    if (d != 0) return {d, rank, i + 1};
  }
  return {0, rank, 0};
}

}  // namespace

std::vector<CmpRecord> navigate(const FrontSet& fs, const Solution& incoming, TreeVariant variant,
                                Counter& counter) {
  if (fs.front_count() < 2) throw ContractError("navigate needs at least two fronts");
  std::vector<CmpRecord> trace;
  std::size_t lo = 1;
  std::size_t hi = fs.front_count();
  for (;;) {
    if (lo == hi) {
      trace.push_back(probe_front(fs.front(lo), lo, incoming, counter));
      return trace;
    }
    const std::size_t mid = midpoint(lo, hi, variant);
    const CmpRecord rec = probe_front(fs.front(mid), mid, incoming, counter);
    trace.push_back(rec);
    if (rec.dom == -1) {
      // left-balanced nodes with one child only have a left child
      if (mid == hi) return trace;
      lo = mid + 1;
    } else {
      // right-balanced nodes with one child only have a right child
      if (mid == lo) return trace;
      hi = mid - 1;
    }
  }
}

void insert_tree(FrontSet& fs, Solution incoming, TreeVariant variant, Counter& counter) {
  if (fs.front_count() < 2) {
    insert_linear(fs, std::move(incoming), counter);
    return;
  }
  fs.admit(incoming);
  const auto trace = navigate(fs, incoming, variant, counter);

  auto settle = [&](const CmpRecord& rec) {
    if (rec.dom == 0) {
      fs.front(rec.front).push_back(std::move(incoming));
    } else {
      detail::settle_dominating(fs, rec.front - 1, rec.index - 1, std::move(incoming), counter);
    }
  };

  if (trace.back().dom != -1) {
    settle(trace.back());
    return;
  }
  // Trailing records are all -1; the level is the node just before them.
  for (std::size_t i = trace.size() - 1; i >= 1; --i) {
    if (trace[i].dom != trace[i - 1].dom) {
      settle(trace[i - 1]);
      return;
    }
  }
  fs.fronts().push_back(Front{std::move(incoming)});
}

std::optional<Position> lookup_tree(const FrontSet& fs, const Solution& sol, Counter& counter,
                                    TreeVariant variant) {
  if (fs.empty()) return std::nullopt;
  std::size_t lo = 1;
  std::size_t hi = fs.front_count();
  for (;;) {
    const bool leaf = lo == hi;
    const std::size_t mid = leaf ? lo : midpoint(lo, hi, variant);
    const Front& f = fs.front(mid);
    DomRelation decided = DomRelation::NonDominated;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto r = check_dom(sol, f[i], counter);
      if (r == DomRelation::Identical) return Position{mid, i + 1};
      if (r != DomRelation::NonDominated) {
        decided = r;
        break;
      }
    }
    if (leaf) return std::nullopt;
    if (decided == DomRelation::DominatedBy) {
      if (mid == hi) return std::nullopt;
      lo = mid + 1;
    } else {
      // dominating a member, or non-dominated with all: sol ranks above mid
      if (mid == lo) return std::nullopt;
      hi = mid - 1;
    }
  }
}

}  // namespace ndlu
