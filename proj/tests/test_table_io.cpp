#include "mdsrel/table_io.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace mdsrel;

namespace {

std::filesystem::path scratch_dir(const char* name) {
  auto dir = std::filesystem::temp_directory_path() / ("mdsrel-test-" + std::string(name));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_SUITE("table_io") {

TEST_CASE("IRWE round trip") {
  const auto p = CodeParams::binary_extension(31, 25, 5);
  const auto t = irwe_table(p);
  std::stringstream ss;
  write_irwe(ss, t);
  CHECK(ss.str().rfind("# mdsrel-table v1\n", 0) == 0);
  CHECK(read_irwe(ss, p) == t);
}

TEST_CASE("sphere table round trip") {
  const auto p = CodeParams::make(9, 5, 8);
  const auto agg = sphere_aggregate(irwe_table(p));
  std::stringstream ss;
  write_spheres(ss, agg);
  const auto back = read_spheres(ss, p);
  CHECK(back.covered == agg.covered);
  CHECK(back.info == agg.info);
  CHECK(back.changes == agg.changes);
}

TEST_CASE("malformed tables are rejected") {
  const auto p = CodeParams::make(4, 2, 5);
  std::stringstream wrong_key;
  write_irwe(wrong_key, irwe_table(p));
  CHECK_THROWS_AS(read_irwe(wrong_key, CodeParams::make(5, 2, 5)), std::runtime_error);

  std::stringstream truncated("# mdsrel-table v1\n# kind=irwe n=4 k=2 q=5 t=1\ni,j,A_ij\n0,0,1\n");
  CHECK_THROWS_AS(read_irwe(truncated, p), std::runtime_error);

  std::stringstream junk("# mdsrel-table v1\n# kind=irwe n=4 k=2 q=5 t=1\ni,j,A_ij\n0,0,x\n");
  CHECK_THROWS_AS(read_irwe(junk, p), std::runtime_error);
}

TEST_CASE("cache stores and reloads") {
  const auto dir = scratch_dir("cache");
  const TableCache cache(dir);
  const auto p = CodeParams::binary_extension(15, 9, 4);
  CHECK_FALSE(cache.load_irwe(p));

  auto a = open_analysis(p, cache, true, 1);
  CHECK(std::filesystem::exists(cache.irwe_path(p)));
  CHECK(std::filesystem::exists(cache.spheres_path(p)));

  auto b = open_analysis(p, cache, true, 1);
  CHECK(b->irwe() == a->irwe());
  CHECK(b->spheres().covered == a->spheres().covered);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory precedence") {
  ::setenv("MDSREL_CACHE", "/tmp/from-env", 1);
  CHECK(TableCache::resolve(std::string("/tmp/from-flag"))->irwe_path(CodeParams::make(4, 2, 5)).parent_path() ==
        "/tmp/from-flag");
  CHECK(TableCache::resolve(std::nullopt)->irwe_path(CodeParams::make(4, 2, 5)).parent_path() == "/tmp/from-env");
  ::unsetenv("MDSREL_CACHE");
  CHECK_FALSE(TableCache::resolve(std::nullopt));
}

}
