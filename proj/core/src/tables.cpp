#include "shl/tables.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "shl/error.hpp"

namespace shl {

using nlohmann::json;

const char* to_string(Expectation e) {
  switch (e) {
    case Expectation::Berger: return "berger";
    case Expectation::NotBerger: return "not_berger";
    case Expectation::SkewProlongation: return "skew_prolongation";
    case Expectation::NoSkewProlongation: return "no_skew_prolongation";
    case Expectation::SkewBerger: return "skew_berger";
  }
  return "?";
}

const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::Pass: return "PASS";
    case RowStatus::Fail: return "FAIL";
    case RowStatus::Skipped: return "SKIPPED";
    case RowStatus::Ceiling: return "CEILING";
    case RowStatus::Error: return "ERROR";
  }
  return "?";
}

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw InputError("grid: " + where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const json& obj, const char* key, const std::string& where) {
  const json& v = field(obj, key, where);
  if (!v.is_string()) bad(where + "." + key, "expected a string");
  return v.get<std::string>();
}

Expectation parse_expectation(const std::string& s, const std::string& where) {
  for (auto e : {Expectation::Berger, Expectation::NotBerger, Expectation::SkewProlongation,
                 Expectation::NoSkewProlongation, Expectation::SkewBerger})
    if (s == to_string(e)) return e;
  bad(where, "unknown expectation '" + s + "'");
}

GridRow parse_row(const json& j, const std::string& where) {
  GridRow r;
  r.row = text(j, "row", where);
  r.spec = text(j, "spec", where);
  r.expect = parse_expectation(text(j, "expect", where), where + ".expect");
  if (j.contains("rational_form")) {
    if (!j["rational_form"].is_boolean()) bad(where + ".rational_form", "expected a boolean");
    r.rational_form = j["rational_form"].get<bool>();
  }
  if (j.contains("max_size")) {
    if (!j["max_size"].is_number_unsigned()) bad(where + ".max_size", "expected a positive integer");
    r.max_size = j["max_size"].get<std::size_t>();
  }
  if (j.contains("note")) r.note = text(j, "note", where);
  return r;
}

bool integrity_ok(const Verdict& v, std::string& failed) {
  static const char* kChecks[] = {"bianchi_rechecked", "pairing_symmetric",   "module_closed",
                                  "block_identities",  "images_form_ideal",   "parity_shift_agrees",
                                  "identity_rechecked"};
  for (const char* key : kChecks) {
    auto it = v.flags.find(key);
    if (it != v.flags.end() && !it->second) {
      failed = key;
      return false;
    }
  }
  return true;
}

}  // namespace

GridFile parse_grid(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("grid: ") + e.what());
  }
  GridFile g;
  const json& version = field(doc, "version", "grid");
  if (!version.is_number_integer()) bad("version", "expected an integer");
  g.version = version.get<int>();
  const json& tables = field(doc, "tables", "grid");
  if (!tables.is_array()) bad("tables", "expected an array");
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const std::string where = "tables[" + std::to_string(t) + "]";
    TableGrid tg;
    const json& id = field(tables[t], "table", where);
    if (!id.is_number_integer() || id.get<int>() < 1 || id.get<int>() > 6) bad(where + ".table", "expected 1..6");
    tg.table = id.get<int>();
    if (tables[t].contains("title")) tg.title = text(tables[t], "title", where);
    const json& rows = field(tables[t], "rows", where);
    if (!rows.is_array()) bad(where + ".rows", "expected an array");
    for (std::size_t r = 0; r < rows.size(); ++r)
      tg.rows.push_back(parse_row(rows[r], where + ".rows[" + std::to_string(r) + "]"));
    if (tables[t].contains("skipped")) {
      const json& sk = tables[t]["skipped"];
      if (!sk.is_array()) bad(where + ".skipped", "expected an array");
      for (std::size_t r = 0; r < sk.size(); ++r) {
        const std::string w = where + ".skipped[" + std::to_string(r) + "]";
        tg.skipped.push_back({text(sk[r], "row", w), text(sk[r], "reason", w)});
      }
    }
    if (!g.tables.emplace(tg.table, std::move(tg)).second) bad(where, "duplicate table id");
  }
  return g;
}

GridFile load_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("grid: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_grid(ss.str());
}

std::string default_grid_path() {
  if (const char* env = std::getenv("SHL_GRIDS")) return env;
  return SHL_DEFAULT_GRIDS;
}

RowResult evaluate_row(const GridRow& row, const VerdictOptions& opts) {
  RowResult r;
  r.row = row.row;
  r.spec = row.spec;
  r.expect = row.expect;
  if (!row.note.empty()) r.notes.push_back(row.note);
  try {
    AlgebraSpec spec = AlgebraSpec::parse(row.spec);
    if (row.rational_form) {
      if (spec.family != "complex") throw InputError("rational_form needs a complex: spec");
      spec = AlgebraSpec(spec.inner[0]);
      r.notes.push_back("evaluated on the rational form " + spec.str() +
                        "; dimensions and spans carry over to the complexification");
    }
    VerdictOptions o = opts;
    o.max_size = std::max(opts.max_size ? opts.max_size : default_max_size(), row.max_size.value_or(0));
    const RepPtr rep = share(make(spec, o.max_size));
    bool got = false, want = true;
    switch (row.expect) {
      case Expectation::Berger:
      case Expectation::NotBerger:
        r.verdict = check_berger(rep, o);
        got = r.verdict->flag("berger");
        want = row.expect == Expectation::Berger;
        break;
      case Expectation::SkewProlongation:
      case Expectation::NoSkewProlongation:
        r.verdict = compute_prolong(rep, false, o);
        got = r.verdict->flag("nonzero");
        want = row.expect == Expectation::SkewProlongation;
        break;
      case Expectation::SkewBerger:
        r.verdict = compute_rbar(rep, o);
        got = r.verdict->flag("skew_berger");
        break;
    }
    std::string failed;
    if (!integrity_ok(*r.verdict, failed)) {
      r.status = RowStatus::Fail;
      r.reason = "consistency check '" + failed + "' failed";
    } else if (got != want) {
      r.status = RowStatus::Fail;
      r.reason = std::string("expected ") + (want ? "" : "not ") + to_string(row.expect) + ", computed the opposite";
    } else {
      r.status = RowStatus::Pass;
    }
  } catch (const CeilingError& e) {
    r.status = RowStatus::Ceiling;
    r.reason = e.what();
  } catch (const InputError& e) {
    r.status = RowStatus::Error;
    r.reason = e.what();
  } catch (const InternalError& e) {
    r.status = RowStatus::Fail;
    r.reason = std::string("internal: ") + e.what();
  }
  return r;
}

std::vector<RowResult> verify_table(const TableGrid& grid, const VerdictOptions& opts, std::size_t jobs) {
  VerdictOptions o = opts;
  // Rows already run side by side; keep each row single-threaded then.
  if (jobs > 1) o.parallel = false;
  auto out = ordered_map<RowResult>(grid.rows.size(), jobs, [&](std::size_t i) { return evaluate_row(grid.rows[i], o); });
  for (const auto& s : grid.skipped) {
    RowResult r;
    r.row = s.row;
    r.status = RowStatus::Skipped;
    r.reason = s.reason;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace shl
