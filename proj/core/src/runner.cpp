#include "shl/runner.hpp"

#include <chrono>
#include <filesystem>

#include <json.hpp>

#include "shl/algebra_io.hpp"
#include "shl/error.hpp"

namespace shl {

using nlohmann::json;

const char* to_string(Command c) {
  switch (c) {
    case Command::ComputeR: return "compute-r";
    case Command::ComputeRbar: return "compute-rbar";
    case Command::ComputeProlong: return "compute-prolong";
    case Command::ComputeWeak: return "compute-weak";
    case Command::CheckBerger: return "check-berger";
    case Command::VerifyTable: return "verify-table";
  }
  return "?";
}

namespace {

json to_json(const Verdict& v, bool timings) {
  json j;
  j["algebra"] = v.algebra;
  j["computation"] = v.computation;
  j["dims"] = v.dims;
  j["flags"] = v.flags;
  j["witnesses"] = v.witnesses;
  j["notes"] = v.notes;
  if (timings) j["seconds"] = v.seconds;
  return j;
}

json to_json(const RowResult& r, bool timings) {
  json j;
  j["row"] = r.row;
  j["status"] = to_string(r.status);
  if (r.status != RowStatus::Skipped) {
    j["spec"] = r.spec;
    j["expect"] = to_string(r.expect);
  }
  if (!r.reason.empty()) j["reason"] = r.reason;
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.verdict) j["verdict"] = to_json(*r.verdict, timings);
  return j;
}

json task_echo(const TaskSpec& t) {
  json j;
  j["command"] = to_string(t.command);
  if (!t.algebra.empty()) j["algebra"] = t.algebra;
  if (!t.kind.empty()) j["kind"] = t.kind;
  if (t.command == Command::VerifyTable) {
    j["table"] = t.table;
    j["grid"] = std::filesystem::path(t.grid.empty() ? default_grid_path() : t.grid).filename().string();
  }
  j["max_size"] = t.max_size ? t.max_size : default_max_size();
  j["properties"] = t.properties;
  return j;
}

VerdictOptions verdict_options(const TaskSpec& t) {
  VerdictOptions o;
  o.max_size = t.max_size;
  o.properties = t.properties;
  return o;
}

Verdict run_single(const TaskSpec& t) {
  const VerdictOptions o = verdict_options(t);
  const RepPtr rep = load_rep(t.algebra, o.max_size ? o.max_size : default_max_size());
  switch (t.command) {
    case Command::ComputeR: return compute_r(rep, o);
    case Command::CheckBerger: return check_berger(rep, o);
    case Command::ComputeRbar: return compute_rbar(rep, o);
    case Command::ComputeProlong:
      if (t.kind != "sym" && t.kind != "skew") throw InputError("--kind must be sym or skew");
      return compute_prolong(rep, t.kind == "sym", o);
    case Command::ComputeWeak:
      if (t.kind != "eta" && t.kind != "omega") throw InputError("--kind must be eta or omega");
      return compute_weak(rep, t.kind == "eta" ? ProlongKind::Eta : ProlongKind::Omega, o);
    case Command::VerifyTable: break;
  }
  throw InputError("not a single-algebra command");
}

int table_exit_code(const std::vector<RowResult>& rows) {
  bool error = false, ceiling = false;
  for (const auto& r : rows) {
    if (r.status == RowStatus::Fail) return kExitMismatch;
    error |= r.status == RowStatus::Error;
    ceiling |= r.status == RowStatus::Ceiling;
  }
  return error ? kExitInput : ceiling ? kExitCeiling : kExitOk;
}

}  // namespace

RepPtr load_rep(const std::string& algebra, std::size_t max_size) {
  if (algebra.empty()) throw InputError("no algebra given");
  std::error_code ec;
  if (std::filesystem::is_regular_file(algebra, ec)) return share(load_algebra(algebra));
  return share(make(AlgebraSpec::parse(algebra), max_size));
}

RunResult run(const TaskSpec& task) {
  const auto t0 = std::chrono::steady_clock::now();
  json report;
  report["schema"] = "shl-report/1";
  report["tool"] = {{"name", "shl"}, {"version", SHL_VERSION}};
  report["task"] = task_echo(task);
  RunResult out;
  try {
    if (task.command == Command::VerifyTable) {
      const GridFile grid = load_grid(task.grid.empty() ? default_grid_path() : task.grid);
      auto it = grid.tables.find(task.table);
      if (it == grid.tables.end()) throw InputError("grid has no table " + std::to_string(task.table));
      const auto rows = verify_table(it->second, verdict_options(task), task.jobs);
      json jr = json::array();
      std::map<std::string, std::size_t> counts;
      for (const auto& r : rows) {
        jr.push_back(to_json(r, task.timings));
        ++counts[to_string(r.status)];
      }
      report["grid_version"] = grid.version;
      report["title"] = it->second.title;
      report["rows"] = jr;
      report["summary"] = counts;
      out.exit_code = table_exit_code(rows);
    } else {
      report["results"] = json::array({to_json(run_single(task), task.timings)});
    }
  } catch (const CeilingError& e) {
    report["error"] = {{"kind", "ceiling"}, {"message", e.what()}, {"requested", e.requested()}, {"limit", e.limit()}};
    out.exit_code = kExitCeiling;
  } catch (const InputError& e) {
    report["error"] = {{"kind", "input"}, {"message", e.what()}};
    out.exit_code = kExitInput;
  } catch (const InternalError& e) {
    report["error"] = {{"kind", "internal"}, {"message", e.what()}};
    out.exit_code = kExitMismatch;
  }
  report["pass"] = out.exit_code == kExitOk;
  if (task.timings)
    report["timings"] = {{"total_seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()}};
  out.report = report.dump(2) + "\n";
  return out;
}

}  // namespace shl
