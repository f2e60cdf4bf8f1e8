#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shl/verdict.hpp"

namespace shl {

// The property a table row asserts.
enum class Expectation {
  Berger,             // L(R(g)) = g
  NotBerger,          // negative control
  SkewProlongation,   // g^[1] != 0
  NoSkewProlongation, // negative control
  SkewBerger,         // images of R-bar(g) span g
};
const char* to_string(Expectation e);

struct GridRow {
  std::string row;   // the table entry being instantiated
  std::string spec;  // catalog spec
  Expectation expect = Expectation::Berger;
  // For complex rows "complex:X": evaluate on X. The defining linear systems
  // have rational coefficients, so complex dimensions and spans over C equal
  // the rational ones of X.
  bool rational_form = false;
  std::optional<std::size_t> max_size;
  std::string note;
};

struct SkippedRow {
  std::string row;
  std::string reason;
};

struct TableGrid {
  int table = 0;
  std::string title;
  std::vector<GridRow> rows;
  std::vector<SkippedRow> skipped;
};

struct GridFile {
  int version = 0;
  std::map<int, TableGrid> tables;
};

GridFile parse_grid(std::string_view json_text);
GridFile load_grid(const std::string& path);
// SHL_GRIDS if set, else the grid file shipped with the sources.
std::string default_grid_path();

enum class RowStatus { Pass, Fail, Skipped, Ceiling, Error };
const char* to_string(RowStatus s);

struct RowResult {
  std::string row;
  std::string spec;
  Expectation expect = Expectation::Berger;
  RowStatus status = RowStatus::Skipped;
  std::string reason;
  std::vector<std::string> notes;
  std::optional<Verdict> verdict;
};

RowResult evaluate_row(const GridRow& row, const VerdictOptions& opts);
// Instantiated rows in grid order, then the skipped ones. Rows run on at most
// `jobs` threads; the output order never depends on scheduling.
std::vector<RowResult> verify_table(const TableGrid& grid, const VerdictOptions& opts, std::size_t jobs);

// Runs fn(0..n-1) on a bounded pool and returns the results by index.
template <class T, class F>
std::vector<T> ordered_map(std::size_t n, std::size_t jobs, F fn);

}  // namespace shl

#include "shl/detail/ordered_map.hpp"
