// ndlu: maintain non-domination levels from the command line.
//
// Exit status: 0 on PASS, 1 on any FAIL, 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ndlu/driver.hpp"
#include "ndlu/io.hpp"

namespace {

constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::string approach = "linear";
  std::string report = "text";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--approach", c.approach, "linear | ltree | rtree")
      ->check(CLI::IsMember({"linear", "ltree", "rtree"}));
  cmd->add_option("--report", c.report, "text | json")->check(CLI::IsMember({"text", "json"}));
}

ndlu::ReportFormat format_of(const Common& c) {
  return c.report == "json" ? ndlu::ReportFormat::Json : ndlu::ReportFormat::Text;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ndlu::InputError("cannot read '" + path + "'");
  return in;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!(out << text)) throw ndlu::InputError("cannot write '" + path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maintain non-domination levels under online insertion and deletion"};
  app.require_subcommand(1);

  Common sort_opt;
  std::string csv_path;
  std::vector<std::string> negate;
  std::string sort_out;
  auto* sort_cmd = app.add_subcommand("sort", "sort a CSV population online, one row at a time");
  sort_cmd->add_option("csv", csv_path, "population CSV ('-' for stdin)")->required();
  sort_cmd->add_option("--negate", negate, "maximized objective columns (name or 1-based index)")
      ->delimiter(',');
  sort_cmd->add_option("--out", sort_out, "write the resulting front dump here");
  add_common(sort_cmd, sort_opt);

  Common run_opt;
  std::string workload_path;
  std::string init_path;
  std::string run_out;
  bool check = false;
  auto* run_cmd = app.add_subcommand("run", "execute an insert/delete/lookup workload");
  run_cmd->add_option("workload", workload_path, "workload file")->required();
  run_cmd->add_option("--init", init_path, "front dump to start from (default: empty)");
  run_cmd->add_option("--out", run_out, "write the final front dump here");
  run_cmd->add_flag("--check", check, "validate the fronts after every insert and delete");
  add_common(run_cmd, run_opt);

  ndlu::FuzzOptions fuzz;
  std::string fuzz_out;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "generate a seeded random workload");
  fuzz_cmd->add_option("--seed", fuzz.seed, "random seed");
  fuzz_cmd->add_option("--steps", fuzz.steps, "number of steps");
  fuzz_cmd->add_option("--max-live", fuzz.max_live, "upper bound on stored solutions")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--objectives,-m", fuzz.objectives, "objective count")->check(CLI::Range(2, 64));
  fuzz_cmd->add_option("--range", fuzz.value_range, "coordinates are drawn from 0..range-1")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--out", fuzz_out, "write the workload here instead of stdout");

  Common bench_opt;
  std::string scenario = "chain";
  ndlu::BenchConfig bench;
  auto* bench_cmd = app.add_subcommand("bench", "count comparisons on a generated scenario");
  bench_cmd->add_option("--scenario", scenario, "chain | antichain | equal-fronts | worst-two-front")
      ->check(CLI::IsMember({"chain", "antichain", "equal-fronts", "worst-two-front"}));
  bench_cmd->add_option("-n", bench.n, "population size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("-k", bench.k, "front count (equal-fronts)")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--objectives,-m", bench.objectives, "objective count")->check(CLI::Range(2, 64));
  add_common(bench_cmd, bench_opt);

  Common verify_opt;
  std::string dump_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a front dump against a full re-sort");
  verify_cmd->add_option("dump", dump_path, "front dump")->required();
  verify_cmd->add_option("--report", verify_opt.report, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*sort_cmd) {
      std::vector<ndlu::Solution> stream;
      if (csv_path == "-") {
        stream = ndlu::read_csv(std::cin, negate, "<stdin>");
      } else {
        auto in = open_in(csv_path);
        stream = ndlu::read_csv(in, negate, csv_path);
      }
      const auto r = ndlu::run_sort(stream, *ndlu::parse_approach(sort_opt.approach));
      if (!sort_out.empty()) write_file(sort_out, ndlu::dump(r.fronts));
      std::cout << render(r, format_of(sort_opt));
      return 0;
    }
    if (*run_cmd) {
      ndlu::FrontSet initial;
      if (!init_path.empty()) {
        auto in = open_in(init_path);
        initial = ndlu::load_front_set(in, init_path);
        const auto v = ndlu::verify(initial);
        if (!v.ok()) throw ndlu::InputError("'" + init_path + "' is not a valid front partition");
      }
      auto in = open_in(workload_path);
      const auto w = ndlu::parse_workload(in, initial, workload_path);
      const auto r = ndlu::run_workload(std::move(initial), w, *ndlu::parse_approach(run_opt.approach), check);
      if (!run_out.empty()) write_file(run_out, ndlu::dump(r.final));
      std::cout << render(r, format_of(run_opt));
      return r.ok() ? 0 : kFail;
    }
    if (*fuzz_cmd) {
      const auto w = ndlu::random_workload(fuzz);
      std::ostringstream os;
      os << "# seed " << fuzz.seed << '\n';
      ndlu::write_workload(os, w);
      if (fuzz_out.empty()) {
        std::cout << os.str();
      } else {
        write_file(fuzz_out, os.str());
      }
      return 0;
    }
    if (*bench_cmd) {
      bench.scenario = *ndlu::parse_scenario(scenario);
      bench.approach = *ndlu::parse_approach(bench_opt.approach);
      const auto r = ndlu::run_bench(bench);
      std::cout << render(r, format_of(bench_opt));
      return r.ok() ? 0 : kFail;
    }
    if (*verify_cmd) {
      auto in = open_in(dump_path);
      const auto fs = ndlu::load_front_set(in, dump_path);
      const auto r = ndlu::verify(fs);
      std::cout << render(r, format_of(verify_opt));
      return r.ok() ? 0 : kFail;
    }
  } catch (const ndlu::Error& e) {
    std::cerr << "ndlu: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "ndlu: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
