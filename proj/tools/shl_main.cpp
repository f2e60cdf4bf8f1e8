// shl: curvature and holonomy verdicts for orthosymplectic superalgebras.

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "shl/runner.hpp"

namespace {

struct Common {
  std::string out;
  std::size_t max_size = 0;
  std::size_t jobs = 0;
  bool no_timings = false;
  bool no_checks = false;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Write the JSON report here instead of stdout");
  sub->add_option("--max-size", c.max_size, "Size ceiling on dim V (default: SHL_MAX_SIZE or 16)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--jobs", c.jobs, "Worker threads for independent tasks (default: hardware)");
  sub->add_flag("--no-timings", c.no_timings, "Omit wall-clock fields so reports are byte-stable");
  sub->add_flag("--no-checks", c.no_checks, "Skip post-hoc property re-verification");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact curvature, Berger and prolongation verdicts for (super)algebras", "shl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", SHL_CLI_VERSION);

  Common common;
  shl::TaskSpec task;
  const char* algebra_help = "Catalog spec (e.g. osp:2,0,2) or algebra JSON file";

  struct Entry {
    const char* name;
    shl::Command command;
    const char* help;
  };
  const Entry entries[] = {
      {"compute-r", shl::Command::ComputeR, "Curvature space R(g)"},
      {"compute-rbar", shl::Command::ComputeRbar, "Skew curvature space R-bar(g) of an even module"},
      {"check-berger", shl::Command::CheckBerger, "Berger and symmetric verdicts"},
      {"compute-prolong", shl::Command::ComputeProlong, "First prolongation, symmetric or skew"},
      {"compute-weak", shl::Command::ComputeWeak, "Weak curvature space P_eta or P_omega"},
      {"verify-table", shl::Command::VerifyTable, "Check a classification table on a parameter grid"},
  };
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    add_common(sub, common);
    const shl::Command cmd = e.command;
    sub->callback([&task, cmd] { task.command = cmd; });
    if (cmd == shl::Command::VerifyTable) {
      sub->add_option("--table", task.table, "Table number")->required()->check(CLI::Range(1, 6));
      sub->add_option("--grid", task.grid, "Grid file (default: the shipped grid)")->check(CLI::ExistingFile);
      continue;
    }
    sub->add_option("--algebra", task.algebra, algebra_help)->required();
    if (cmd == shl::Command::ComputeProlong)
      sub->add_option("--kind", task.kind, "sym or skew")->required()->check(CLI::IsMember({"sym", "skew"}));
    if (cmd == shl::Command::ComputeWeak)
      sub->add_option("--kind", task.kind, "eta or omega")->required()->check(CLI::IsMember({"eta", "omega"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : shl::kExitInput;
  }

  task.max_size = common.max_size;
  task.jobs = common.jobs ? common.jobs : std::max(1u, std::thread::hardware_concurrency());
  task.timings = !common.no_timings;
  task.properties = !common.no_checks;

  const shl::RunResult result = shl::run(task);
  if (common.out.empty()) {
    std::cout << result.report;
  } else {
    std::ofstream f(common.out, std::ios::binary);
    if (!f) {
      std::cerr << "shl: cannot write " << common.out << "\n";
      return shl::kExitInput;
    }
    f << result.report;
  }
  if (result.exit_code != shl::kExitOk) std::cerr << "shl: exit " << result.exit_code << "\n";
  return result.exit_code;
}
