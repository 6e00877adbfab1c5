// Domain types shared by every module: solutions, the Pareto dominance
// relation, the comparison counter and the ordered set of fronts.
//
// All objectives are minimized. Maximization objectives must be negated
// before a Solution is built.

#ifndef NDLU_CORE_HPP
#define NDLU_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ndlu {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objective vectors of different length were compared.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A solution with M < 2 objectives or a non-finite objective value.
class InvalidSolutionError : public Error {
 public:
  using Error::Error;
};

class DuplicateIdError : public Error {
 public:
  using Error::Error;
};

class MissingSolutionError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an update procedure does not hold.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// One point in objective space with a stable identifier.
struct Solution {
  std::string id;
  std::vector<double> objectives;

  Solution() = default;
  /// Throws InvalidSolutionError unless there are at least two objectives and
  /// all of them are finite.
  Solution(std::string id, std::vector<double> objectives);

  std::size_t dimension() const noexcept { return objectives.size(); }

  friend bool operator==(const Solution&, const Solution&) = default;
};

enum class DomRelation {
  Dominates,    ///< a is no worse everywhere and better somewhere
  DominatedBy,  ///< b dominates a
  NonDominated,
  Identical,    ///< all coordinates bitwise-equal as doubles
};

std::string_view to_string(DomRelation r) noexcept;

/// Tally of solution-pair dominance comparisons. One comparison of two
/// solutions counts once regardless of M.
struct Counter {
  std::uint64_t pair_compares = 0;

  void reset() noexcept { pair_compares = 0; }
};

/// Three-valued comparison used by the insertion and update procedures:
/// 1 if a dominates b, -1 if b dominates a, 0 otherwise (identical vectors
/// included). Increments the counter once.
int dom_nature(const Solution& a, const Solution& b, Counter& counter);

/// Four-valued comparison used by lookup. Increments the counter once.
DomRelation check_dom(const Solution& a, const Solution& b, Counter& counter);

/// Same relation as check_dom, without instrumentation. Used by validation
/// and diagnostics that must not disturb counter values.
DomRelation relation(std::span<const double> a, std::span<const double> b);

using Front = std::vector<Solution>;

/// Ordered partition of a population into fronts F_1..F_K, best rank first.
///
/// The set itself does not enforce the front invariants; the update
/// procedures preserve them and validate() checks them.
class FrontSet {
 public:
  FrontSet() = default;
  explicit FrontSet(std::size_t objectives) : m_(objectives) {}
  FrontSet(std::size_t objectives, std::vector<Front> fronts)
      : m_(objectives), fronts_(std::move(fronts)) {}

  /// Objective count M; 0 while the set has never held a solution.
  std::size_t objectives() const noexcept { return m_; }
  std::size_t front_count() const noexcept { return fronts_.size(); }
  bool empty() const noexcept { return fronts_.empty(); }
  /// Total number of solutions N.
  std::size_t size() const noexcept;

  const std::vector<Front>& fronts() const noexcept { return fronts_; }
  std::vector<Front>& fronts() noexcept { return fronts_; }

  /// Front by 1-based rank.
  const Front& front(std::size_t rank) const { return fronts_.at(rank - 1); }
  Front& front(std::size_t rank) { return fronts_.at(rank - 1); }

  /// Front sizes n_1..n_K.
  std::vector<std::size_t> profile() const;

  bool contains(std::string_view id) const noexcept;
  /// Stored solution with the given id, or nullptr.
  const Solution* find(std::string_view id) const noexcept;

  /// All solutions, front by front.
  std::vector<Solution> flatten() const;

  /// Checks that `s` may be added: dimension agrees with M (fixing M if the
  /// set is still dimensionless) and the id is not present yet.
  void admit(const Solution& s);

  friend bool operator==(const FrontSet&, const FrontSet&) = default;

 private:
  std::size_t m_ = 0;
  std::vector<Front> fronts_;
};

/// One broken FrontSet invariant.
struct Violation {
  enum class Kind {
    EmptyFront,
    Dimension,
    DuplicateId,
    IntraFrontDominance,
    NotDominatedByPrevious,
  };
  Kind kind;
  std::string message;
};

std::string_view to_string(Violation::Kind k) noexcept;

/// Lists every violated FrontSet invariant; empty iff the set is a valid
/// level partition. Performs no counted comparisons.
std::vector<Violation> validate(const FrontSet& fs);

}  // namespace ndlu

#endif  // NDLU_CORE_HPP
