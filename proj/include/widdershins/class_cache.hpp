#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "widdershins/pattern_class.hpp"

namespace widdershins {

/// Bumped whenever the on-disk layout or the meaning of an oracle id changes.
inline constexpr int kCacheFormatVersion = 1;

/// Environment variable that overrides the default cache directory.
inline constexpr const char* kCacheDirEnv = "WIDDERSHINS_CACHE_DIR";

/// Line-based level cache: one file per (oracle id, length) holding a header
/// with the format version and oracle id, then the members and the basis
/// elements of that length in text form. Files whose header does not match
/// are ignored.
class DirectoryLevelCache final : public LevelCache {
 public:
  explicit DirectoryLevelCache(std::filesystem::path root);

  std::optional<ClassLevel> load(const std::string& oracle_id, std::size_t length) override;
  void store(const std::string& oracle_id, std::size_t length, const ClassLevel& level) override;

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path file_for(const std::string& oracle_id, std::size_t length) const;

 private:
  std::filesystem::path root_;
};

/// `explicit_dir` if set, else $WIDDERSHINS_CACHE_DIR, else ".cache".
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& explicit_dir);

}  // namespace widdershins
