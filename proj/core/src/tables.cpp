#include "wesym/tables.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "wesym/error.hpp"
#include "wesym/gf.hpp"

namespace wesym {

std::string to_string(Route r) {
  switch (r) {
    case Route::Direct: return "direct";
    case Route::ViaDual: return "via-dual";
    case Route::Skipped: return "skipped";
  }
  return "unknown";
}

bool TableSpec::is_skipped(unsigned r, unsigned m) const {
  return std::find(skipped.begin(), skipped.end(), std::make_pair(r, m)) != skipped.end();
}

namespace {

TableSpec binary_spec() {
  TableSpec t;
  t.q = 2;
  t.rows = 7;
  t.cols = 7;
  t.expected = {
      {"inf", "D4", "D8", "D16", "D32", "D64", "D128"},
      {"inf", "D4", "S4", "D8", "D16", "D32", "D64"},
      {"inf", "inf", "D8", "D8", "S4", "D4", "D8"},
      {"inf", "inf", "inf", "D16", "D16", "D4", "S4"},
      {"inf", "inf", "inf", "inf", "D32", "D32", "D8"},
      {"inf", "inf", "inf", "inf", "inf", "D64", "D64"},
      {"inf", "inf", "inf", "inf", "inf", "inf", "D128"},
  };
  // RM_2(3,7) is self-dual with 2^64 codewords.
  t.skipped = {{3, 7}};
  return t;
}

TableSpec ternary_spec() {
  TableSpec t;
  t.q = 3;
  t.rows = 8;
  t.cols = 4;
  t.expected = {
      {"D3", "D9", "D27", "D81"},   {"D3", "C3", "C9", "C27"},  {"inf", "C3", "C3", "C3"},
      {"inf", "D9", "C3", ""},      {"inf", "inf", "C9", ""},   {"inf", "inf", "D27", "C3"},
      {"inf", "inf", "inf", "C27"}, {"inf", "inf", "inf", "D81"},
  };
  t.skipped = {{3, 4}, {4, 4}};
  return t;
}

TableSpec quaternary_spec() {
  TableSpec t;
  t.q = 4;
  t.rows = 9;
  t.cols = 3;
  t.expected = {
      {"D8", "D16", "D64"}, {"V4", "C4", "C16"},   {"D8", "Id", "C4"},
      {"inf", "Id", "Id"},  {"inf", "C4", ""},     {"inf", "D16", "Id"},
      {"inf", "inf", "C4"}, {"inf", "inf", "C16"}, {"inf", "inf", "D64"},
  };
  // (4,3) is empty in the published table; (3,3) and (5,3) are beyond desk scale.
  t.skipped = {{3, 3}, {4, 3}, {5, 3}};
  return t;
}

}  // namespace

const TableSpec& table_spec(unsigned q) {
  static const TableSpec t2 = binary_spec();
  static const TableSpec t3 = ternary_spec();
  static const TableSpec t4 = quaternary_spec();
  switch (q) {
    case 2: return t2;
    case 3: return t3;
    case 4: return t4;
    default: throw Error(Errc::InvalidArgument, "no published table for q = " + std::to_string(q));
  }
}

std::string group_label(const SymmetryGroup& g) {
  if (g.kind == GroupKind::Infinite) return "inf";
  return g.iso ? g.iso->label() : "?";
}

std::size_t TableRun::mismatches() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](const CellResult& c) {
    return c.route != Route::Skipped && !c.match;
  }));
}

std::size_t TableRun::skipped() const {
  return static_cast<std::size_t>(std::count_if(
      cells.begin(), cells.end(), [](const CellResult& c) { return c.route == Route::Skipped; }));
}

const CellResult& TableRun::at(unsigned r, unsigned m) const {
  for (const auto& c : cells) {
    if (c.r == r && c.m == m) return c;
  }
  throw Error(Errc::InvalidArgument, "cell outside the table run");
}

Route choose_route(unsigned q, std::size_t n, std::size_t k, std::uint64_t budget) {
  const std::uint64_t direct = codeword_count(q, k);
  const std::uint64_t viadual = codeword_count(q, n - k);
  if (direct <= viadual && direct <= budget) return Route::Direct;
  if (viadual <= budget) return Route::ViaDual;
  if (direct <= budget) return Route::Direct;
  return Route::Skipped;
}

TableRun run_table(unsigned q, const TableOptions& opts) {
  const TableSpec& spec = table_spec(q);
  TableRun run;
  run.q = q;
  run.rows = spec.rows;
  run.cols = opts.max_m == 0 ? spec.cols : std::min(opts.max_m, spec.cols);
  const FieldPtr F = field_of_order(q);
  for (unsigned r = 0; r < spec.rows; ++r) {
    for (unsigned m = 1; m <= run.cols; ++m) {
      CellResult cell;
      cell.r = r;
      cell.m = m;
      cell.expected = spec.label(r, m);
      const auto t0 = std::chrono::steady_clock::now();
      if (!spec.is_skipped(r, m)) {
        try {
          const LinearCode code = reed_muller(F, r, m);
          cell.route = choose_route(q, code.n(), code.k(), opts.enumeration.budget);
          if (cell.route != Route::Skipped) {
            const WeightEnumerator w = opts.cache ? opts.cache->get(code, opts.enumeration)
                                                  : weight_enumerator_smart(code, opts.enumeration);
            const SymmetryGroup g = symmetry_group(HomPoly(w), q, opts.symmetry);
            cell.computed = group_label(g);
            cell.proj_order = g.proj_order;
            cell.full_order = g.full_order;
            cell.match = cell.computed == cell.expected;
          }
        } catch (const Error& e) {
          cell.error = e.what();
          cell.computed = "error";
          if (cell.route == Route::Skipped) cell.route = Route::Direct;
        }
      }
      cell.seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (opts.progress) opts.progress(cell);
      run.cells.push_back(std::move(cell));
    }
  }
  return run;
}

std::string render_table(const TableRun& run) {
  std::ostringstream out;
  constexpr int kWidth = 7;
  auto pad = [&](const std::string& s) {
    out << s;
    for (int i = static_cast<int>(s.size()); i < kWidth; ++i) out << ' ';
  };
  out << "RM_" << run.q << "(r,m)\n";
  pad("r\\m");
  for (unsigned m = 1; m <= run.cols; ++m) pad(std::to_string(m));
  out << '\n';
  for (unsigned r = 0; r < run.rows; ++r) {
    pad(std::to_string(r));
    for (unsigned m = 1; m <= run.cols; ++m) {
      const CellResult& c = run.at(r, m);
      if (c.route == Route::Skipped) {
        pad("-");
      } else {
        pad(c.computed + (c.match ? "" : "!"));
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace wesym
