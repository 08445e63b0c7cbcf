#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wesym/cache.hpp"
#include "wesym/code.hpp"
#include "wesym/symgroup.hpp"

namespace wesym {

enum class Route { Direct, ViaDual, Skipped };
std::string to_string(Route r);

// Published projective symmetry groups of RM_q(r, m). Labels are "inf",
// "Id", "C<k>", "V4", "D<k>" (order 2k), "A4", "S4", "A5"; "" marks a cell
// the published table leaves empty.
struct TableSpec {
  unsigned q = 0;
  unsigned rows = 0;  // r = 0 .. rows-1
  unsigned cols = 0;  // m = 1 .. cols
  std::vector<std::vector<std::string>> expected;  // [r][m-1]
  // Cells never computed here: empty in the published table or beyond desk scale.
  std::vector<std::pair<unsigned, unsigned>> skipped;

  const std::string& label(unsigned r, unsigned m) const { return expected.at(r).at(m - 1); }
  bool is_skipped(unsigned r, unsigned m) const;
};

// q in {2, 3, 4}; throws InvalidArgument otherwise.
const TableSpec& table_spec(unsigned q);

std::string group_label(const SymmetryGroup& g);

struct CellResult {
  unsigned r = 0;
  unsigned m = 0;
  Route route = Route::Skipped;
  std::string expected;
  std::string computed;  // "" when skipped
  bool match = false;
  double seconds = 0;
  std::size_t proj_order = 0;
  std::size_t full_order = 0;
  std::string error;  // error message when the computation failed
};

struct TableOptions {
  unsigned max_m = 0;  // 0: every column of the table
  EnumerationOptions enumeration;
  SymmetryOptions symmetry;
  EnumeratorCache* cache = nullptr;
  std::function<void(const CellResult&)> progress;
};

struct TableRun {
  unsigned q = 0;
  unsigned rows = 0;
  unsigned cols = 0;
  std::vector<CellResult> cells;  // row-major

  std::size_t mismatches() const;
  std::size_t skipped() const;
  const CellResult& at(unsigned r, unsigned m) const;
};

// Direct when the code itself is at most as large as its dual and fits the
// budget, ViaDual when only the dual fits, Skipped otherwise.
Route choose_route(unsigned q, std::size_t n, std::size_t k, std::uint64_t budget);

TableRun run_table(unsigned q, const TableOptions& opts = {});

// Grid with "inf", group labels, "-" for skipped cells and "!" after mismatches.
std::string render_table(const TableRun& run);

}  // namespace wesym
