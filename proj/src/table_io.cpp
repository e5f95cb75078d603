#include "mdsrel/table_io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mdsrel {

namespace {

constexpr const char* kMagic = "# mdsrel-table v1";

std::string key_line(const char* kind, const CodeParams& p) {
  std::ostringstream os;
  os << "# kind=" << kind << " n=" << p.n << " k=" << p.k << " q=" << p.q << " t=" << p.radius();
  return os.str();
}

void expect_line(std::istream& is, const std::string& want) {
  std::string line;
  if (!std::getline(is, line) || line != want) throw std::runtime_error("table: expected '" + want + "', got '" + line + "'");
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

int to_int(const std::string& s) {
  std::size_t used = 0;
  const int v = std::stoi(s, &used);
  if (used != s.size()) throw std::runtime_error("table: bad integer '" + s + "'");
  return v;
}

ExactInt to_big(const std::string& s) {
  ExactInt z;
  if (z.set_str(s, 10) != 0) throw std::runtime_error("table: bad integer '" + s + "'");
  return z;
}

}  // namespace

void write_irwe(std::ostream& os, const IrweTable& table) {
  const auto& p = table.params();
  os << kMagic << '\n' << key_line("irwe", p) << '\n' << "i,j,A_ij\n";
  for (int i = 0; i <= p.k; ++i)
    for (int j = 0; j <= p.redundancy(); ++j) os << i << ',' << j << ',' << table(i, j).get_str() << '\n';
}

void write_spheres(std::ostream& os, const SphereAggregate& agg) {
  const auto& p = agg.params;
  os << kMagic << '\n' << key_line("spheres", p) << '\n' << "r1,r2,covered,info,changes\n";
  for (int r1 = 0; r1 <= p.k; ++r1)
    for (int r2 = 0; r2 <= p.redundancy(); ++r2) {
      const auto idx = agg.index(r1, r2);
      os << r1 << ',' << r2 << ',' << agg.covered[idx].get_str() << ',' << agg.info[idx].get_str() << ','
         << agg.changes[idx].get_str() << '\n';
    }
}

IrweTable read_irwe(std::istream& is, const CodeParams& p) {
  expect_line(is, kMagic);
  expect_line(is, key_line("irwe", p));
  expect_line(is, "i,j,A_ij");
  IrweTable t(p);
  std::size_t rows = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv(line);
    if (cells.size() != 3) throw std::runtime_error("table: expected 3 columns");
    const int i = to_int(cells[0]), j = to_int(cells[1]);
    if (i < 0 || i > p.k || j < 0 || j > p.redundancy()) throw std::runtime_error("table: index out of range");
    t(i, j) = to_big(cells[2]);
    ++rows;
  }
  if (rows != static_cast<std::size_t>(p.k + 1) * (p.redundancy() + 1)) throw std::runtime_error("table: row count");
  return t;
}

SphereAggregate read_spheres(std::istream& is, const CodeParams& p) {
  expect_line(is, kMagic);
  expect_line(is, key_line("spheres", p));
  expect_line(is, "r1,r2,covered,info,changes");
  const std::size_t cells = static_cast<std::size_t>(p.k + 1) * (p.redundancy() + 1);
  SphereAggregate agg{p, std::vector<ExactInt>(cells), std::vector<ExactInt>(cells), std::vector<ExactInt>(cells)};
  std::size_t rows = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto c = split_csv(line);
    if (c.size() != 5) throw std::runtime_error("table: expected 5 columns");
    const int r1 = to_int(c[0]), r2 = to_int(c[1]);
    if (r1 < 0 || r1 > p.k || r2 < 0 || r2 > p.redundancy()) throw std::runtime_error("table: index out of range");
    const auto idx = agg.index(r1, r2);
    agg.covered[idx] = to_big(c[2]);
    agg.info[idx] = to_big(c[3]);
    agg.changes[idx] = to_big(c[4]);
    ++rows;
  }
  if (rows != cells) throw std::runtime_error("table: row count");
  return agg;
}

std::optional<TableCache> TableCache::resolve(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return TableCache(*flag);
  if (const char* env = std::getenv("MDSREL_CACHE"); env && *env) return TableCache(env);
  return std::nullopt;
}

std::filesystem::path TableCache::irwe_path(const CodeParams& p) const {
  return dir_ / ("irwe_n" + std::to_string(p.n) + "_k" + std::to_string(p.k) + "_q" + std::to_string(p.q) + "_t" +
                 std::to_string(p.radius()) + ".csv");
}

std::filesystem::path TableCache::spheres_path(const CodeParams& p) const {
  return dir_ / ("spheres_n" + std::to_string(p.n) + "_k" + std::to_string(p.k) + "_q" + std::to_string(p.q) + "_t" +
                 std::to_string(p.radius()) + ".csv");
}

std::optional<IrweTable> TableCache::load_irwe(const CodeParams& p) const {
  std::ifstream in(irwe_path(p));
  if (!in) return std::nullopt;
  return read_irwe(in, p);
}

std::optional<SphereAggregate> TableCache::load_spheres(const CodeParams& p) const {
  std::ifstream in(spheres_path(p));
  if (!in) return std::nullopt;
  return read_spheres(in, p);
}

namespace {

// write to a temporary name and rename, so readers never see half a file
template <class Writer>
void atomic_write(const std::filesystem::path& dest, Writer&& write) {
  std::filesystem::create_directories(dest.parent_path());
  auto tmp = dest;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    write(out);
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, dest);
}

}  // namespace

void TableCache::store(const IrweTable& table) const {
  atomic_write(irwe_path(table.params()), [&](std::ostream& os) { write_irwe(os, table); });
}

void TableCache::store(const SphereAggregate& agg) const {
  atomic_write(spheres_path(agg.params), [&](std::ostream& os) { write_spheres(os, agg); });
}

std::unique_ptr<CodeAnalysis> open_analysis(const CodeParams& p, const std::optional<TableCache>& cache,
                                            bool need_spheres, int workers) {
  std::optional<IrweTable> irwe;
  if (cache) irwe = cache->load_irwe(p);
  const bool fresh = !irwe;
  if (fresh) irwe = irwe_table(p);
  if (cache && fresh) cache->store(*irwe);

  auto a = std::make_unique<CodeAnalysis>(std::move(*irwe));
  a->set_workers(workers);
  if (!need_spheres) return a;
  if (cache) {
    if (auto agg = cache->load_spheres(p)) {
      a->set_spheres(std::move(*agg));
      return a;
    }
    cache->store(a->spheres());
  }
  return a;
}

}  // namespace mdsrel
