#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include <gtest/gtest.h>

#include "test_util.hpp"
#include "wesym/cache.hpp"
#include "wesym/error.hpp"
#include "wesym/tables.hpp"

using namespace wesym;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const fs::path d = fs::temp_directory_path() / ("wesym_test_" + tag + "_" + std::to_string(::getpid()));
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(CodeKey, InvariantUnderRowOperations) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 20; ++t) {
    const LinearCode c = test::random_code(rng, 3, 4, 9);
    // Add row 1 to row 0 and swap: same code, different generator.
    auto rows = c.gen();
    if (rows.size() < 2) continue;
    for (std::size_t j = 0; j < c.n(); ++j) rows[0][j] = c.F().add(rows[0][j], rows[1][j]);
    std::swap(rows[0], rows[1]);
    const LinearCode d(c.field(), c.n(), rows);
    EXPECT_EQ(code_key(c), code_key(d));
  }
  EXPECT_NE(code_key(reed_muller(make_field(2), 1, 3)), code_key(reed_muller(make_field(2), 1, 4)));
  EXPECT_NE(code_key(zero_code(make_field(2), 3)), code_key(zero_code(make_field(3), 3)));
}

TEST(EnumeratorCache, MemoryAndDisk) {
  const fs::path dir = fresh_dir("cache");
  const LinearCode c = reed_muller(make_field(3), 1, 3);
  const WeightEnumerator ref = weight_enumerator(c);
  {
    EnumeratorCache cache(dir);
    EXPECT_FALSE(cache.lookup(c).has_value());
    EXPECT_EQ(cache.get(c), ref);
    EXPECT_EQ(cache.get(c), ref);
    EXPECT_EQ(cache.hits(), 1u);
    EXPECT_EQ(cache.misses(), 2u);
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files[0].extension(), ".wen");
  const std::string first = slurp(files[0]);
  {
    EnumeratorCache cache(dir);
    const auto hit = cache.lookup(c);
    ASSERT_TRUE(hit.has_value());
    EXPECT_EQ(*hit, ref);
    cache.store(c, *hit);
  }
  EXPECT_EQ(slurp(files[0]), first);
  fs::remove_all(dir);
}

TEST(TableSpec, Shapes) {
  EXPECT_EQ(table_spec(2).rows, 7u);
  EXPECT_EQ(table_spec(2).cols, 7u);
  EXPECT_EQ(table_spec(3).rows, 8u);
  EXPECT_EQ(table_spec(4).rows, 9u);
  EXPECT_EQ(table_spec(2).label(1, 3), "S4");
  EXPECT_TRUE(table_spec(2).is_skipped(3, 7));
  EXPECT_TRUE(table_spec(3).is_skipped(4, 4));
  EXPECT_TRUE(table_spec(4).is_skipped(5, 3));
  EXPECT_FALSE(table_spec(4).is_skipped(6, 3));
  EXPECT_THROW(table_spec(5), Error);
  // Row 0 is the repetition code x^n + y^n with n = q^m, dihedral of that order
  // except the degenerate binary m = 1 case.
  EXPECT_EQ(table_spec(3).label(0, 3), "D27");
  EXPECT_EQ(table_spec(2).label(0, 1), "inf");
}

TEST(ChooseRoute, SmallerSideWithinBudget) {
  EXPECT_EQ(choose_route(2, 128, 29, std::uint64_t{1} << 32), Route::Direct);
  EXPECT_EQ(choose_route(2, 128, 99, std::uint64_t{1} << 32), Route::ViaDual);
  EXPECT_EQ(choose_route(2, 128, 64, std::uint64_t{1} << 32), Route::Skipped);
  EXPECT_EQ(choose_route(3, 81, 15, std::uint64_t{1} << 20), Route::Skipped);
  EXPECT_EQ(choose_route(3, 81, 75, std::uint64_t{1} << 20), Route::ViaDual);
  EXPECT_EQ(to_string(Route::ViaDual), "via-dual");
}

TEST(RunTable, SmallBinaryRun) {
  EnumeratorCache cache;
  TableOptions opts;
  opts.max_m = 3;
  opts.cache = &cache;
  std::size_t seen = 0;
  opts.progress = [&](const CellResult&) { ++seen; };
  const TableRun run = run_table(2, opts);
  EXPECT_EQ(run.cols, 3u);
  EXPECT_EQ(run.cells.size(), 21u);
  EXPECT_EQ(seen, 21u);
  EXPECT_EQ(run.mismatches(), 0u);
  EXPECT_EQ(run.skipped(), 0u);
  EXPECT_EQ(run.at(1, 3).computed, "S4");
  EXPECT_EQ(run.at(1, 3).full_order, 8u * 24u);
  EXPECT_EQ(run.at(0, 1).computed, "inf");
  const std::string grid = render_table(run);
  EXPECT_NE(grid.find("S4"), std::string::npos);
  EXPECT_EQ(grid.find('!'), std::string::npos);
}

TEST(RenderTable, MarksSkippedAndMismatched) {
  TableRun run;
  run.q = 3;
  run.rows = 1;
  run.cols = 2;
  CellResult a;
  a.r = 0;
  a.m = 1;
  a.route = Route::Direct;
  a.expected = "D3";
  a.computed = "C3";
  CellResult b;
  b.r = 0;
  b.m = 2;
  b.expected = "";
  run.cells = {a, b};
  EXPECT_EQ(run.mismatches(), 1u);
  EXPECT_EQ(run.skipped(), 1u);
  const std::string grid = render_table(run);
  EXPECT_NE(grid.find("C3!"), std::string::npos);
  EXPECT_NE(grid.find('-'), std::string::npos);
}
