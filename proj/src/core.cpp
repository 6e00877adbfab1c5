#include "ndlu/core.hpp"

#include <cmath>
#include <sstream>
#include <unordered_set>

namespace ndlu {

Solution::Solution(std::string id_, std::vector<double> objectives_)
    : id(std::move(id_)), objectives(std::move(objectives_)) {
  if (objectives.size() < 2) {
    throw InvalidSolutionError("solution '" + id + "' needs at least 2 objectives, got " +
                               std::to_string(objectives.size()));
  }
  for (double v : objectives) {
    if (!std::isfinite(v)) {
      throw InvalidSolutionError("solution '" + id + "' has a non-finite objective");
    }
  }
}

std::string_view to_string(DomRelation r) noexcept {
  switch (r) {
    case DomRelation::Dominates: return "dominates";
    case DomRelation::DominatedBy: return "dominated-by";
    case DomRelation::NonDominated: return "non-dominated";
    case DomRelation::Identical: return "identical";
  }
  return "?";
}

DomRelation relation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw DimensionError("objective count mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  bool better = false;
  bool worse = false;
  // branch-free: outcomes of individual coordinates are unpredictable
  for (std::size_t i = 0; i < a.size(); ++i) {
    better |= a[i] < b[i];
    worse |= a[i] > b[i];
  }
  if (better && !worse) return DomRelation::Dominates;
  if (worse && !better) return DomRelation::DominatedBy;
  if (!better && !worse) return DomRelation::Identical;
  return DomRelation::NonDominated;
}

DomRelation check_dom(const Solution& a, const Solution& b, Counter& counter) {
  auto r = relation(a.objectives, b.objectives);
  ++counter.pair_compares;
  return r;
}

int dom_nature(const Solution& a, const Solution& b, Counter& counter) {
  switch (check_dom(a, b, counter)) {
    case DomRelation::Dominates: return 1;
    case DomRelation::DominatedBy: return -1;
    default: return 0;
  }
}

std::size_t FrontSet::size() const noexcept {
  std::size_t n = 0;
  for (const auto& f : fronts_) n += f.size();
  return n;
}

std::vector<std::size_t> FrontSet::profile() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(fronts_.size());
  for (const auto& f : fronts_) sizes.push_back(f.size());
  return sizes;
}

const Solution* FrontSet::find(std::string_view id) const noexcept {
  for (const auto& f : fronts_) {
    for (const auto& s : f) {
      if (s.id == id) return &s;
    }
  }
  return nullptr;
}

bool FrontSet::contains(std::string_view id) const noexcept { return find(id) != nullptr; }

std::vector<Solution> FrontSet::flatten() const {
  std::vector<Solution> all;
  all.reserve(size());
  for (const auto& f : fronts_) all.insert(all.end(), f.begin(), f.end());
  return all;
}

void FrontSet::admit(const Solution& s) {
  if (m_ == 0) {
    m_ = s.dimension();
  } else if (s.dimension() != m_) {
    throw DimensionError("solution '" + s.id + "' has " + std::to_string(s.dimension()) +
                         " objectives, front set has " + std::to_string(m_));
  }
  if (contains(s.id)) throw DuplicateIdError("duplicate solution id '" + s.id + "'");
}

std::string_view to_string(Violation::Kind k) noexcept {
  switch (k) {
    case Violation::Kind::EmptyFront: return "empty-front";
    case Violation::Kind::Dimension: return "dimension";
    case Violation::Kind::DuplicateId: return "duplicate-id";
    case Violation::Kind::IntraFrontDominance: return "intra-front-dominance";
    case Violation::Kind::NotDominatedByPrevious: return "not-dominated-by-previous";
  }
  return "?";
}

std::vector<Violation> validate(const FrontSet& fs) {
  std::vector<Violation> out;
  auto report = [&out](Violation::Kind kind, std::string msg) {
    out.push_back({kind, std::move(msg)});
  };

  const auto& fronts = fs.fronts();
  std::unordered_set<std::string_view> seen;
  bool dims_ok = true;
  for (std::size_t k = 0; k < fronts.size(); ++k) {
    if (fronts[k].empty()) report(Violation::Kind::EmptyFront, "F_" + std::to_string(k + 1) + " is empty");
    for (const auto& s : fronts[k]) {
      if (!seen.insert(s.id).second) {
        report(Violation::Kind::DuplicateId, "id '" + s.id + "' appears more than once");
      }
      if (s.dimension() != fs.objectives()) {
        dims_ok = false;
        std::ostringstream msg;
        msg << "'" << s.id << "' in F_" << k + 1 << " has " << s.dimension() << " objectives, expected "
            << fs.objectives();
        report(Violation::Kind::Dimension, msg.str());
      }
    }
  }
  if (!dims_ok) return out;

  for (std::size_t k = 0; k < fronts.size(); ++k) {
    const auto& f = fronts[k];
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        auto r = relation(f[i].objectives, f[j].objectives);
        if (r == DomRelation::Dominates || r == DomRelation::DominatedBy) {
          std::ostringstream msg;
          msg << "F_" << k + 1 << ": '" << f[i].id << "' " << to_string(r) << " '" << f[j].id << "'";
          report(Violation::Kind::IntraFrontDominance, msg.str());
        }
      }
    }
    if (k == 0) continue;
    for (const auto& s : f) {
      bool covered = false;
      for (const auto& p : fronts[k - 1]) {
        if (relation(p.objectives, s.objectives) == DomRelation::Dominates) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        std::ostringstream msg;
        msg << "'" << s.id << "' in F_" << k + 1 << " is not dominated by any solution of F_" << k;
        report(Violation::Kind::NotDominatedByPrevious, msg.str());
      }
    }
  }
  return out;
}

}  // namespace ndlu
