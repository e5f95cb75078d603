#pragma once

#include "mdsrel/rates.hpp"

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>

namespace mdsrel {

/// Decimal-integer CSV, first line `# mdsrel-table v1`, then a key line
/// `# kind=<irwe|spheres> n=.. k=.. q=.. t=..` and a column header.
void write_irwe(std::ostream& os, const IrweTable& table);
void write_spheres(std::ostream& os, const SphereAggregate& agg);

/// Throws std::runtime_error on malformed input or a key mismatch.
IrweTable read_irwe(std::istream& is, const CodeParams& params);
SphereAggregate read_spheres(std::istream& is, const CodeParams& params);

/// Directory of cached tables keyed by (n, k, q, t).
class TableCache {
 public:
  explicit TableCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Directory from the flag if given, else MDSREL_CACHE, else none.
  static std::optional<TableCache> resolve(const std::optional<std::string>& flag);

  std::filesystem::path irwe_path(const CodeParams& p) const;
  std::filesystem::path spheres_path(const CodeParams& p) const;

  std::optional<IrweTable> load_irwe(const CodeParams& p) const;
  std::optional<SphereAggregate> load_spheres(const CodeParams& p) const;
  void store(const IrweTable& table) const;
  void store(const SphereAggregate& agg) const;

 private:
  std::filesystem::path dir_;
};

/// Analysis object backed by the cache when one is given. Sphere tables are
/// loaded or built (and stored) only when `need_spheres` is set.
std::unique_ptr<CodeAnalysis> open_analysis(const CodeParams& p, const std::optional<TableCache>& cache,
                                            bool need_spheres, int workers);

}  // namespace mdsrel
