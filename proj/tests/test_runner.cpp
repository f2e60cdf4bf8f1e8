#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>

#include <json.hpp>

#include "shl/error.hpp"
#include "shl/runner.hpp"

namespace shl {
namespace {

using nlohmann::json;

std::string fixture(const char* name) { return std::string(SHL_FIXTURES) + "/" + name; }

TaskSpec task(Command c, std::string algebra = "") {
  TaskSpec t;
  t.command = c;
  t.algebra = std::move(algebra);
  t.timings = false;
  return t;
}

TaskSpec table(int id, std::size_t jobs = 1) {
  TaskSpec t = task(Command::VerifyTable);
  t.table = id;
  t.grid = fixture("small_grid.json");
  t.jobs = jobs;
  return t;
}

TEST(Runner, CheckBergerOsp202) {
  const auto out = run(task(Command::CheckBerger, "osp:2,0,2"));
  EXPECT_EQ(out.exit_code, kExitOk);
  const auto j = json::parse(out.report);
  EXPECT_EQ(j["schema"], "shl-report/1");
  EXPECT_EQ(j["tool"]["name"], "shl");
  EXPECT_TRUE(j["pass"].get<bool>());
  const auto& v = j["results"][0];
  EXPECT_TRUE(v["flags"]["berger"].get<bool>());
  EXPECT_FALSE(v["flags"]["symmetric"].get<bool>());
  EXPECT_TRUE(v["flags"]["bianchi_rechecked"].get<bool>());
  EXPECT_TRUE(v["flags"]["block_identities"].get<bool>());
  EXPECT_EQ(j["task"]["algebra"], "osp:2,0,2");
}

TEST(Runner, ZeroAlgebraFile) {
  const auto out = run(task(Command::ComputeR, fixture("zero_algebra.json")));
  EXPECT_EQ(out.exit_code, kExitOk);
  const auto v = json::parse(out.report)["results"][0];
  EXPECT_EQ(v["dims"]["R_even"], 0);
  EXPECT_EQ(v["dims"]["R_odd"], 0);
}

TEST(Runner, InputErrors) {
  EXPECT_EQ(run(task(Command::ComputeR, "nope:2")).exit_code, kExitInput);
  EXPECT_EQ(run(task(Command::ComputeR, "")).exit_code, kExitInput);
  EXPECT_EQ(run(task(Command::ComputeR, fixture("not_closed.json"))).exit_code, kExitInput);
  TaskSpec bad_kind = task(Command::ComputeProlong, "so:0,3");
  bad_kind.kind = "diagonal";
  EXPECT_EQ(run(bad_kind).exit_code, kExitInput);
  TaskSpec missing_table = table(4);
  EXPECT_EQ(run(missing_table).exit_code, kExitInput);
  const auto j = json::parse(run(task(Command::ComputeR, "nope:2")).report);
  EXPECT_EQ(j["error"]["kind"], "input");
  EXPECT_FALSE(j["pass"].get<bool>());
}

TEST(Runner, CeilingListsSizes) {
  TaskSpec t = task(Command::ComputeR, "so:0,20");
  t.max_size = 10;
  const auto out = run(t);
  EXPECT_EQ(out.exit_code, kExitCeiling);
  const auto j = json::parse(out.report);
  EXPECT_EQ(j["error"]["kind"], "ceiling");
  EXPECT_EQ(j["error"]["requested"], 20);
  EXPECT_EQ(j["error"]["limit"], 10);
}

TEST(Runner, ProlongAndWeak) {
  TaskSpec p = task(Command::ComputeProlong, "so:0,4");
  p.kind = "skew";
  EXPECT_EQ(json::parse(run(p).report)["results"][0]["dims"]["prolongation"], 4);
  TaskSpec w = task(Command::ComputeWeak, "sp_real:1");
  w.kind = "omega";
  const auto v = json::parse(run(w).report)["results"][0];
  EXPECT_EQ(v["dims"]["weak_curvature"], 2);
  EXPECT_TRUE(v["flags"]["weak_berger"].get<bool>());
  EXPECT_TRUE(v["flags"]["strong_implies_weak"].get<bool>());
  const auto rb = json::parse(run(task(Command::ComputeRbar, "sp_real:1")).report)["results"][0];
  EXPECT_EQ(rb["dims"]["Rbar"], 1);
  EXPECT_TRUE(rb["flags"]["parity_shift_agrees"].get<bool>());
}

TEST(Runner, DeterministicWithoutTimings) {
  const auto a = run(task(Command::CheckBerger, "u_super:1,0,0,1"));
  const auto b = run(task(Command::CheckBerger, "u_super:1,0,0,1"));
  EXPECT_EQ(a.report, b.report);
  EXPECT_EQ(a.report.find("seconds"), std::string::npos);
  EXPECT_EQ(a.report.back(), '\n');
}

TEST(Runner, TimingsWhenRequested) {
  TaskSpec t = task(Command::ComputeR, "so:0,3");
  t.timings = true;
  const auto j = json::parse(run(t).report);
  EXPECT_TRUE(j.contains("timings"));
  EXPECT_TRUE(j["results"][0].contains("seconds"));
}

TEST(VerifyTable, PositivesAndNegativeControl) {
  const auto out = run(table(1));
  EXPECT_EQ(out.exit_code, kExitOk);
  const auto j = json::parse(out.report);
  EXPECT_EQ(j["grid_version"], 7);
  ASSERT_EQ(j["rows"].size(), 6u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(j["rows"][i]["status"], "PASS") << j["rows"][i].dump();
  EXPECT_EQ(j["rows"][4]["expect"], "not_berger");
  EXPECT_FALSE(j["rows"][4]["verdict"]["flags"]["berger"].get<bool>());
  EXPECT_EQ(j["rows"][5]["status"], "SKIPPED");
  EXPECT_EQ(j["rows"][5]["reason"], "spinorial");
  EXPECT_EQ(j["summary"]["PASS"], 5);
  EXPECT_EQ(j["summary"]["SKIPPED"], 1);
  EXPECT_EQ(j["task"]["grid"], "small_grid.json");
}

TEST(VerifyTable, OutputIndependentOfJobs) {
  EXPECT_EQ(run(table(1, 1)).report, run(table(1, 3)).report);
}

TEST(VerifyTable, MismatchExitsOne) {
  const auto out = run(table(3));
  EXPECT_EQ(out.exit_code, kExitMismatch);
  const auto j = json::parse(out.report);
  EXPECT_EQ(j["rows"][0]["status"], "PASS");
  EXPECT_EQ(j["rows"][1]["status"], "FAIL");
}

TEST(VerifyTable, CeilingAndCatalogMiss) {
  TaskSpec t = table(2);
  t.max_size = 4;
  const auto out = run(t);
  const auto j = json::parse(out.report);
  EXPECT_EQ(j["rows"][0]["status"], "CEILING");
  EXPECT_EQ(j["rows"][1]["status"], "PASS");
  EXPECT_EQ(j["rows"][2]["status"], "ERROR");
  EXPECT_EQ(out.exit_code, kExitInput);
}

TEST(VerifyTable, RationalForms) {
  const auto out = run(table(5));
  EXPECT_EQ(out.exit_code, kExitMismatch);
  const auto j = json::parse(out.report);
  EXPECT_EQ(j["rows"][0]["status"], "PASS");
  EXPECT_EQ(j["rows"][1]["status"], "FAIL");  // sl(2)^[1] = 0
}

TEST(Grid, ErrorsCarryLocation) {
  try {
    parse_grid(R"({"version":1,"tables":[{"table":1,"rows":[{"row":"a","spec":"so:0,3","expect":"maybe"}]}]})");
    FAIL() << "accepted";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("tables[0].rows[0].expect"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_grid(R"({"version":1,"tables":[{"table":9,"rows":[]}]})"), InputError);
  EXPECT_THROW(parse_grid(R"({"tables":[]})"), InputError);
  EXPECT_THROW(parse_grid("[1,"), InputError);
  EXPECT_THROW(load_grid(fixture("absent.json")), InputError);
}

TEST(Grid, ShippedGridParses) {
  const auto g = load_grid(default_grid_path());
  EXPECT_EQ(g.tables.size(), 6u);
  for (const auto& [id, t] : g.tables) {
    EXPECT_EQ(id, t.table);
    EXPECT_FALSE(t.rows.empty());
    for (const auto& r : t.rows) EXPECT_NO_THROW(AlgebraSpec::parse(r.spec)) << r.spec;
  }
}

TEST(OrderedMap, KeepsIndexOrder) {
  std::atomic<int> calls{0};
  const auto out = ordered_map<std::size_t>(50, 4, [&](std::size_t i) {
    ++calls;
    return i * i;
  });
  ASSERT_EQ(out.size(), 50u);
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(out[i], i * i);
  EXPECT_EQ(calls.load(), 50);
}

TEST(OrderedMap, RethrowsFirstFailureByIndex) {
  try {
    ordered_map<int>(10, 3, [](std::size_t i) -> int {
      if (i == 7 || i == 3) throw std::runtime_error("fail " + std::to_string(i));
      return 0;
    });
    FAIL() << "no exception";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "fail 3");
  }
}

}  // namespace
}  // namespace shl
