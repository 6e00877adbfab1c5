#include "ndlu/driver.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <random>
#include <sstream>
#include <stdexcept>

#include "ndlu/analysis.hpp"
#include "ndlu/oracle.hpp"

namespace ndlu {

using nlohmann::json;

std::optional<Position> position_of(const FrontSet& fs, std::string_view id) {
  const auto& fronts = fs.fronts();
  for (std::size_t k = 0; k < fronts.size(); ++k) {
    for (std::size_t i = 0; i < fronts[k].size(); ++i) {
      if (fronts[k][i].id == id) return Position{k + 1, i + 1};
    }
  }
  return std::nullopt;
}

namespace {

std::string where(const std::optional<Position>& p) {
  if (!p) return "-";
  return "F" + std::to_string(p->front) + "[" + std::to_string(p->index) + "]";
}

json position_json(const std::optional<Position>& p) {
  if (!p) return nullptr;
  return {{"front", p->front}, {"index", p->index}};
}

std::string profile_text(const FrontSet& fs) {
  std::string out;
  for (auto n : fs.profile()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(n);
  }
  return out.empty() ? "-" : out;
}

void list_fronts(std::ostringstream& os, const FrontSet& fs) {
  for (std::size_t k = 0; k < fs.front_count(); ++k) {
    os << 'F' << k + 1 << ':';
    for (const auto& s : fs.fronts()[k]) os << ' ' << s.id;
    os << '\n';
  }
}

}  // namespace

// sort ---------------------------------------------------------------------

SortReport run_sort(const std::vector<Solution>& stream, Approach approach) {
  Counter c;
  SortReport r;
  r.approach = approach;
  r.fronts = sort_online(stream, approach, c);
  r.compares = c.pair_compares;
  return r;
}

std::string render(const SortReport& r, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    json j = {{"command", "sort"},
              {"approach", to_string(r.approach)},
              {"solutions", r.fronts.size()},
              {"compares", r.compares},
              {"profile", r.fronts.profile()},
              {"dump", to_json(r.fronts)}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "sort approach=" << to_string(r.approach) << " solutions=" << r.fronts.size()
     << " fronts=" << r.fronts.front_count() << " compares=" << r.compares << '\n';
  list_fronts(os, r.fronts);
  return os.str();
}

// run ----------------------------------------------------------------------

RunReport run_workload(FrontSet initial, const Workload& w, Approach approach, bool check) {
  RunReport r;
  r.approach = approach;
  r.checked = check;
  FrontSet& fs = initial;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Step& step = w[i];
    StepResult res{i + 1, step.kind, step.id, 0, std::nullopt};
    Counter c;
    switch (step.kind) {
      case StepKind::Insert:
        insert(fs, Solution(step.id, step.objectives), approach, c);
        res.position = position_of(fs, step.id);
        break;
      case StepKind::Delete:
        remove(fs, step.id, approach, c);
        break;
      case StepKind::Lookup: {
        const Solution* stored = fs.find(step.id);
        if (stored == nullptr) throw MissingSolutionError("lookup of missing id '" + step.id + "'");
        const Solution probe = *stored;
        res.position = locate(fs, probe, approach, c);
        break;
      }
    }
    res.compares = c.pair_compares;
    r.total_compares += c.pair_compares;
    r.steps.push_back(res);

    if (step.kind == StepKind::Lookup && !res.position) {
      r.failure = "step " + std::to_string(i + 1) + ": lookup of '" + step.id + "' found nothing";
      break;
    }
    if (check && step.kind != StepKind::Lookup) {
      const auto v = validate(fs);
      if (!v.empty()) {
        r.failure = "step " + std::to_string(i + 1) + ": " + v.front().message;
        break;
      }
    }
  }
  r.final = std::move(fs);
  return r;
}

std::string render(const RunReport& r, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    json steps = json::array();
    for (const auto& s : r.steps) {
      steps.push_back({{"step", s.step},
                       {"op", to_string(s.kind)},
                       {"id", s.id},
                       {"compares", s.compares},
                       {"position", position_json(s.position)}});
    }
    json j = {{"command", "run"},
              {"approach", to_string(r.approach)},
              {"check", r.checked},
              {"steps", std::move(steps)},
              {"total_compares", r.total_compares},
              {"solutions", r.final.size()},
              {"profile", r.final.profile()},
              {"result", r.ok() ? "PASS" : "FAIL"}};
    if (!r.ok()) j["failure"] = r.failure;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "run approach=" << to_string(r.approach) << " check=" << (r.checked ? "on" : "off")
     << " steps=" << r.steps.size() << '\n';
  for (const auto& s : r.steps) {
    char line[256];
    std::snprintf(line, sizeof line, "%6zu  %-6s  %-12s  %8llu  %s\n", s.step,
                  std::string(to_string(s.kind)).c_str(), s.id.c_str(),
                  static_cast<unsigned long long>(s.compares), where(s.position).c_str());
    os << line;
  }
  os << "total compares: " << r.total_compares << '\n';
  os << "solutions: " << r.final.size() << "  profile: " << profile_text(r.final) << '\n';
  if (!r.ok()) os << "failure: " << r.failure << '\n';
  os << "result: " << (r.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

Workload random_workload(const FuzzOptions& opt) {
  if (opt.objectives < 2) throw std::invalid_argument("fuzz workloads need at least two objectives");
  if (opt.value_range == 0) throw std::invalid_argument("value range must be positive");
  std::mt19937_64 rng(opt.seed);
  auto below = [&](std::uint64_t n) { return rng() % n; };

  Workload w;
  w.reserve(opt.steps);
  std::vector<std::string> live;
  std::size_t next_id = 0;
  for (std::size_t i = 0; i < opt.steps; ++i) {
    if (!live.empty() && below(100) < opt.lookup_percent) {
      w.push_back({StepKind::Lookup, live[below(live.size())], {}});
      continue;
    }
    const bool room = live.size() < opt.max_live;
    if (live.empty() || (room && below(100) < opt.insert_percent)) {
      Step s{StepKind::Insert, "w" + std::to_string(++next_id), {}};
      for (std::size_t k = 0; k < opt.objectives; ++k) {
        s.objectives.push_back(static_cast<double>(below(opt.value_range)));
      }
      live.push_back(s.id);
      w.push_back(std::move(s));
    } else {
      const auto at = below(live.size());
      w.push_back({StepKind::Delete, live[at], {}});
      live[at] = std::move(live.back());
      live.pop_back();
    }
  }
  return w;
}

// verify -------------------------------------------------------------------

VerifyReport verify(const FrontSet& fs) {
  VerifyReport r;
  r.violations = validate(fs);
  r.solutions = fs.size();
  r.fronts = fs.front_count();
  const auto all = fs.flatten();
  try {
    r.oracle_match = same_partition(fs, full_sort(all));
  } catch (const Error&) {
    r.oracle_match = false;  // duplicates or mixed dimensions, already reported
  }
  return r;
}

std::string render(const VerifyReport& r, ReportFormat fmt) {
  if (fmt == ReportFormat::Json) {
    json violations = json::array();
    for (const auto& v : r.violations) {
      violations.push_back({{"kind", to_string(v.kind)}, {"message", v.message}});
    }
    json j = {{"command", "verify"},
              {"solutions", r.solutions},
              {"fronts", r.fronts},
              {"violations", std::move(violations)},
              {"oracle_match", r.oracle_match},
              {"result", r.ok() ? "PASS" : "FAIL"}};
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "verify solutions=" << r.solutions << " fronts=" << r.fronts << '\n';
  if (r.violations.empty()) os << "validate: ok\n";
  for (const auto& v : r.violations) os << "validate: " << to_string(v.kind) << ": " << v.message << '\n';
  os << "oracle: " << (r.oracle_match ? "match" : "mismatch") << '\n';
  os << "result: " << (r.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

// bench --------------------------------------------------------------------

std::string_view to_string(Scenario s) noexcept {
  switch (s) {
    case Scenario::Chain:
      return "chain";
    case Scenario::Antichain:
      return "antichain";
    case Scenario::EqualFronts:
      return "equal-fronts";
    case Scenario::WorstTwoFront:
      return "worst-two-front";
  }
  return "?";
}

std::optional<Scenario> parse_scenario(std::string_view name) noexcept {
  for (auto s : {Scenario::Chain, Scenario::Antichain, Scenario::EqualFronts, Scenario::WorstTwoFront}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

bool BenchReport::ok() const noexcept {
  for (const auto& row : rows) {
    if (!row.pass()) return false;
  }
  return true;
}

std::size_t deepest_rank(std::size_t fronts, TreeVariant variant) {
  std::size_t best = 0;
  std::size_t best_depth = 0;
  for (std::size_t r = 1; r <= fronts; ++r) {
    std::size_t lo = 1;
    std::size_t hi = fronts;
    std::size_t depth = 0;
    for (;;) {
      ++depth;
      const std::size_t mid = lo == hi ? lo : midpoint(lo, hi, variant);
      if (mid == r) break;
      if (r > mid) {
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
    if (depth >= best_depth) {
      best_depth = depth;
      best = r;
    }
  }
  return best;
}

namespace {

std::uint64_t floor_log2(std::uint64_t x) { return static_cast<std::uint64_t>(std::bit_width(x)) - 1; }

std::vector<double> padded(std::vector<double> head, std::size_t m, double pad) {
  head.resize(std::max<std::size_t>(m, 2), pad);
  return head;
}

std::uint64_t insert_cost(FrontSet fs, const Solution& probe, Approach a) {
  Counter c;
  insert(fs, probe, a, c);
  return c.pair_compares;
}

std::uint64_t lookup_cost(const FrontSet& fs, const Solution& target, Approach a) {
  Counter c;
  if (!locate(fs, target, a, c)) throw Error("scenario lookup missed '" + target.id + "'");
  return c.pair_compares;
}

}  // namespace

BenchReport run_bench(const BenchConfig& cfg) {
  if (cfg.n == 0) throw std::invalid_argument("N must be positive");
  if (cfg.objectives < 2) throw std::invalid_argument("at least two objectives are needed");
  BenchReport rep{cfg, {}};
  const auto n = static_cast<std::uint64_t>(cfg.n);
  const std::size_t m = cfg.objectives;
  const bool tree = cfg.approach != Approach::Linear;

  switch (cfg.scenario) {
    case Scenario::Chain: {
      const FrontSet fs = full_sort(gen_chain(cfg.n, m));
      const Solution probe("probe", std::vector<double>(m, static_cast<double>(n + 1)));
      rep.rows.push_back({"insert globally dominated probe", insert_cost(fs, probe, cfg.approach),
                          tree ? floor_log2(n) + 1 : n});
      break;
    }
    case Scenario::Antichain: {
      const FrontSet fs = full_sort(gen_antichain(cfg.n, m));
      const double dn = static_cast<double>(n);
      const Solution loose("probe", padded({0.5, dn - 0.5}, m, 0.0));
      const Solution beaten("probe", padded({2.0, dn}, m, 0.0));
      rep.rows.push_back({"insert probe non-dominated with all", insert_cost(fs, loose, cfg.approach), n});
      rep.rows.push_back(
          {"insert probe dominated by first solution", insert_cost(fs, beaten, cfg.approach), 1});
      break;
    }
    case Scenario::EqualFronts: {
      const FrontSet fs = full_sort(gen_equal_fronts(cfg.n, cfg.k, m));
      const auto k = static_cast<std::uint64_t>(cfg.k);
      std::size_t rank = cfg.k;
      std::uint64_t formula = k + n / k - 1;
      if (tree) {
        const auto variant =
            cfg.approach == Approach::LeftTree ? TreeVariant::LeftBalanced : TreeVariant::RightBalanced;
        rank = deepest_rank(cfg.k, variant);
        formula = floor_log2(k) + n / k;
      }
      const Solution target = fs.front(rank).back();
      rep.rows.push_back({"lookup last solution of F" + std::to_string(rank),
                          lookup_cost(fs, target, cfg.approach), formula});
      break;
    }
    case Scenario::WorstTwoFront: {
      const auto inst = gen_worst_two_front(cfg.n, m);
      const FrontSet fs = full_sort(inst.population);
      const std::uint64_t measured = insert_cost(fs, inst.probe, cfg.approach);
      std::uint64_t closed = worst_linear_closed_form(n);
      std::uint64_t profile = max_comp_linear(inst.profile);
      if (cfg.approach == Approach::LeftTree) {
        closed = worst_left_tree_closed_form(n);
        profile = max_comp_left_tree(inst.profile);
      } else if (cfg.approach == Approach::RightTree) {
        closed = worst_right_tree_closed_form(n);
        profile = max_comp_right_tree(inst.profile);
      }
      rep.rows.push_back({"insert probe, closed form", measured, closed});
      rep.rows.push_back({"insert probe, profile formula", measured, profile});
      break;
    }
  }
  return rep;
}

std::string render(const BenchReport& r, ReportFormat fmt) {
  const auto& c = r.config;
  if (fmt == ReportFormat::Json) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"measure", row.measure},
                      {"measured", row.measured},
                      {"formula", row.formula},
                      {"result", row.pass() ? "PASS" : "FAIL"}});
    }
    json j = {{"command", "bench"},
              {"scenario", to_string(c.scenario)},
              {"n", c.n},
              {"m", c.objectives},
              {"approach", to_string(c.approach)},
              {"rows", std::move(rows)},
              {"result", r.ok() ? "PASS" : "FAIL"}};
    if (c.scenario == Scenario::EqualFronts) j["k"] = c.k;
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "bench scenario=" << to_string(c.scenario) << " n=" << c.n;
  if (c.scenario == Scenario::EqualFronts) os << " k=" << c.k;
  os << " m=" << c.objectives << " approach=" << to_string(c.approach) << '\n';
  char line[256];
  std::snprintf(line, sizeof line, "%-40s %10s %10s  %s\n", "measure", "measured", "formula", "result");
  os << line;
  for (const auto& row : r.rows) {
    std::snprintf(line, sizeof line, "%-40s %10llu %10llu  %s\n", row.measure.c_str(),
                  static_cast<unsigned long long>(row.measured),
                  static_cast<unsigned long long>(row.formula), row.pass() ? "PASS" : "FAIL");
    os << line;
  }
  os << "result: " << (r.ok() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace ndlu
