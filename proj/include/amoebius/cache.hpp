#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "amoebius/lattice.hpp"

namespace amoebius {

inline constexpr char kEngineVersion[] = "amoebius-lattice-1";

/// Deterministic JSON: spec, engine version, element count and every
/// subgroup as a lowercase little-endian hex bitset, in lattice order.
std::string lattice_to_json(std::string const &spec, SubgroupLattice const &lattice);

/// Throws VersionMismatch for another engine version and Error for any
/// other inconsistency with `group`.
SubgroupLattice lattice_from_json(std::string const &text, std::string const &spec,
                                  std::shared_ptr<FiniteGroup const> group);

struct CacheEntryInfo {
  std::filesystem::path file;
  std::string spec;
  std::string version;
  std::size_t order = 0;
  std::size_t subgroups = 0;
};

class LatticeCache {
public:
  explicit LatticeCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// MOEBIUS_CACHE_DIR, if set and non-empty.
  static std::optional<std::filesystem::path> dir_from_env();

  std::filesystem::path const &dir() const noexcept { return dir_; }
  std::filesystem::path file_for(std::string const &spec) const;

  /// Cached lattice when valid; otherwise recompute, store and append a
  /// warning explaining why the file was not used.
  std::shared_ptr<SubgroupLattice const> get(std::string const &spec,
                                             std::shared_ptr<FiniteGroup const> group,
                                             LatticeOptions const &options,
                                             std::vector<std::string> *warnings = nullptr);

  /// Recompute unconditionally and overwrite.
  std::shared_ptr<SubgroupLattice const> build(std::string const &spec,
                                               std::shared_ptr<FiniteGroup const> group,
                                               LatticeOptions const &options);

  /// Entries sorted by file name; unreadable files are skipped.
  std::vector<CacheEntryInfo> info() const;
  std::size_t clear();

private:
  void store(std::string const &spec, SubgroupLattice const &lattice) const;

  std::filesystem::path dir_;
};

} // namespace amoebius
