// Command implementations behind the ndlu executable. Everything here is
// deterministic: same inputs and options, same report bytes.

#ifndef NDLU_DRIVER_HPP
#define NDLU_DRIVER_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ndlu/core.hpp"
#include "ndlu/io.hpp"
#include "ndlu/online.hpp"

namespace ndlu {

enum class ReportFormat { Text, Json };

/// Uncounted id search.
std::optional<Position> position_of(const FrontSet& fs, std::string_view id);

// sort ---------------------------------------------------------------------

struct SortReport {
  Approach approach = Approach::Linear;
  std::uint64_t compares = 0;
  FrontSet fronts;
};

SortReport run_sort(const std::vector<Solution>& stream, Approach approach);
std::string render(const SortReport& r, ReportFormat fmt);

// run ----------------------------------------------------------------------

struct StepResult {
  std::size_t step = 0;  ///< 1-based
  StepKind kind = StepKind::Insert;
  std::string id;
  std::uint64_t compares = 0;
  std::optional<Position> position;  ///< where the solution sits or was found
};

struct RunReport {
  Approach approach = Approach::Linear;
  bool checked = false;
  std::vector<StepResult> steps;
  std::uint64_t total_compares = 0;
  std::string failure;  ///< empty on success
  FrontSet final;

  bool ok() const noexcept { return failure.empty(); }
};

/// Executes `w` on `initial`. With `check`, validate() runs after every
/// insert and delete; the first violation stops the run. A lookup that does
/// not find its solution is a failure too.
RunReport run_workload(FrontSet initial, const Workload& w, Approach approach, bool check);
std::string render(const RunReport& r, ReportFormat fmt);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t steps = 200;
  std::size_t max_live = 300;
  std::size_t objectives = 2;
  std::uint32_t value_range = 10;  ///< coordinates drawn from 0..value_range-1
  unsigned insert_percent = 65;    ///< share of inserts while below max_live
  unsigned lookup_percent = 10;
};

/// Seeded random workload over small integer coordinates, so ties, duplicate
/// vectors and long dominance chains all occur.
Workload random_workload(const FuzzOptions& opt);

// verify -------------------------------------------------------------------

struct VerifyReport {
  std::vector<Violation> violations;
  bool oracle_match = false;
  std::size_t solutions = 0;
  std::size_t fronts = 0;

  bool ok() const noexcept { return violations.empty() && oracle_match; }
};

/// validate() plus equality with full_sort of the flattened solutions.
VerifyReport verify(const FrontSet& fs);
std::string render(const VerifyReport& r, ReportFormat fmt);

// bench --------------------------------------------------------------------

enum class Scenario { Chain, Antichain, EqualFronts, WorstTwoFront };

std::string_view to_string(Scenario s) noexcept;
std::optional<Scenario> parse_scenario(std::string_view name) noexcept;

struct BenchConfig {
  Scenario scenario = Scenario::Chain;
  std::size_t n = 100;
  std::size_t k = 10;  ///< equal-fronts only
  std::size_t objectives = 2;
  Approach approach = Approach::Linear;
};

struct BenchRow {
  std::string measure;
  std::uint64_t measured = 0;
  std::uint64_t formula = 0;

  bool pass() const noexcept { return measured == formula; }
};

struct BenchReport {
  BenchConfig config;
  std::vector<BenchRow> rows;

  bool ok() const noexcept;
};

/// Builds the scenario population, applies each probe operation to a fresh
/// copy and compares its counter with the closed-form count. Throws
/// std::invalid_argument for impossible sizes.
BenchReport run_bench(const BenchConfig& cfg);
std::string render(const BenchReport& r, ReportFormat fmt);

/// Rank of a deepest node of the tree over K fronts, i.e. a front whose
/// lookup path has floor(log2 K) + 1 nodes. Largest such rank.
std::size_t deepest_rank(std::size_t fronts, TreeVariant variant);

}  // namespace ndlu

#endif  // NDLU_DRIVER_HPP
