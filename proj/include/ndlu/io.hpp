// Text formats: CSV populations, JSON front dumps and workload scripts.
//
// CSV: a header row `id,<name_1>,...,<name_M>` followed by one solution per
// row. Fields are split on commas and trimmed; quoting is not supported.
//
// Dump: {"m": M, "fronts": [[{"id": ..., "obj": [...]}, ...], ...]}, best
// rank first. Doubles are printed in shortest round-trip form.
//
// Workload: one step per line, `insert,<id>,<v_1>,...,<v_M>`,
// `delete,<id>` or `lookup,<id>`. Blank lines and lines starting with '#'
// are skipped.

#ifndef NDLU_IO_HPP
#define NDLU_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ndlu/core.hpp"

namespace ndlu {

/// Malformed or inconsistent input; the message names source and line.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Reads a CSV population. `negate` lists objective columns to multiply by
/// -1, each given by header name or 1-based objective index.
std::vector<Solution> read_csv(std::istream& in, const std::vector<std::string>& negate = {},
                               std::string_view source = "<csv>");

nlohmann::json to_json(const FrontSet& fs);
/// Structural checks only; validate() tells whether the partition is sound.
FrontSet front_set_from_json(const nlohmann::json& j);

/// to_json(fs) as text, two-space indented, newline-terminated.
std::string dump(const FrontSet& fs);
FrontSet load_front_set(std::istream& in, std::string_view source = "<dump>");

/// Shortest decimal form that reads back to the same double.
std::string format_number(double v);

enum class StepKind { Insert, Delete, Lookup };

std::string_view to_string(StepKind k) noexcept;

struct Step {
  StepKind kind = StepKind::Insert;
  std::string id;
  std::vector<double> objectives;  ///< empty unless kind == Insert

  friend bool operator==(const Step&, const Step&) = default;
};

using Workload = std::vector<Step>;

/// Parses a workload to run against `initial`. Rejects inserts of ids that
/// are live, deletes and lookups of ids that are not, and objective counts
/// that disagree with the set or with earlier inserts.
Workload parse_workload(std::istream& in, const FrontSet& initial,
                        std::string_view source = "<workload>");

void write_workload(std::ostream& out, const Workload& w);

}  // namespace ndlu

#endif  // NDLU_IO_HPP
