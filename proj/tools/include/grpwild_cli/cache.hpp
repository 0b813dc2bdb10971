#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grpwild/group_ops.hpp"
#include "grpwild/table_group.hpp"

namespace grpwild::cli {

/// On-disk store for expensive enumerations. Entries carry a magic header,
/// the tool version and a checksum; stale or corrupt entries are misses.
class Cache {
 public:
  Cache(std::filesystem::path dir, std::string version);

  /// --cache-dir if given, else $GRPWILD_CACHE, else none.
  static std::optional<Cache> from_config(const std::optional<std::string>& dir,
                                          std::string version);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(std::string_view key) const;

  void store(std::string_view key, const std::vector<std::uint32_t>& payload) const;
  /// nullopt on a miss; corrupt entries print a warning to stderr.
  std::optional<std::vector<std::uint32_t>> load(std::string_view key) const;

  void store_partition(std::string_view key, const ConjPartition& p) const;
  std::optional<ConjPartition> load_partition(std::string_view key) const;

  /// Enumerated multiplication table of `g`.
  void store_table(std::string_view key, const TableGroup& g) const;
  std::optional<std::vector<std::uint32_t>> load_table(std::string_view key) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
};

std::uint64_t fnv1a(const void* data, std::size_t size,
                    std::uint64_t seed = 0xcbf29ce484222325ull);

/// Cache key for an expression, a data kind and the relevant limits.
std::string cache_key(std::string_view expr, std::string_view kind,
                      std::uint64_t config_hash);

/// Partition from class ids; classes ordered by id with ascending members.
ConjPartition partition_from_ids(std::vector<std::uint32_t> class_of);

}  // namespace grpwild::cli
