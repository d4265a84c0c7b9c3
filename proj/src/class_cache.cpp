#include "widdershins/class_cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "widdershins/error.hpp"

namespace widdershins {

namespace {

std::string directory_name(const std::string& oracle_id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : oracle_id) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::string safe;
  for (char c : oracle_id) {
    if (safe.size() >= 40) break;
    const bool keep = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                      c == '-' || c == '_';
    safe.push_back(keep ? c : '_');
  }
  std::ostringstream os;
  os << safe << '-' << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string header_line(const std::string& oracle_id, std::size_t length) {
  return "# widdershins-cache v" + std::to_string(kCacheFormatVersion) + " oracle=" + oracle_id +
         " length=" + std::to_string(length);
}

}  // namespace

DirectoryLevelCache::DirectoryLevelCache(std::filesystem::path root) : root_(std::move(root)) {}

std::filesystem::path DirectoryLevelCache::file_for(const std::string& oracle_id,
                                                    std::size_t length) const {
  return root_ / directory_name(oracle_id) / ("length-" + std::to_string(length) + ".txt");
}

std::optional<ClassLevel> DirectoryLevelCache::load(const std::string& oracle_id,
                                                    std::size_t length) {
  std::ifstream in(file_for(oracle_id, length));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != header_line(oracle_id, length)) return std::nullopt;

  ClassLevel level;
  std::vector<Permutation>* section = nullptr;
  std::size_t expected_members = 0, expected_basis = 0;
  bool complete = false;
  try {
    while (std::getline(in, line)) {
      if (line.rfind("# members ", 0) == 0) {
        section = &level.members;
        expected_members = std::stoull(line.substr(10));
      } else if (line.rfind("# basis ", 0) == 0) {
        section = &level.basis;
        expected_basis = std::stoull(line.substr(8));
      } else if (line == "# end") {
        complete = true;
        break;
      } else if (section) {
        section->push_back(parse_permutation(line));
      } else {
        return std::nullopt;
      }
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!complete || level.members.size() != expected_members ||
      level.basis.size() != expected_basis) {
    return std::nullopt;
  }
  for (const auto* part : {&level.members, &level.basis}) {
    for (const auto& p : *part) {
      if (p.size() != length) return std::nullopt;
    }
  }
  return level;
}

void DirectoryLevelCache::store(const std::string& oracle_id, std::size_t length,
                                const ClassLevel& level) {
  const auto target = file_for(oracle_id, length);
  std::error_code ec;
  std::filesystem::create_directories(target.parent_path(), ec);
  if (ec) throw CacheError("cannot create " + target.parent_path().string() + ": " + ec.message());
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CacheError("cannot write " + tmp.string());
    out << header_line(oracle_id, length) << '\n';
    out << "# members " << level.members.size() << '\n';
    for (const auto& p : level.members) out << to_string(p) << '\n';
    out << "# basis " << level.basis.size() << '\n';
    for (const auto& p : level.basis) out << to_string(p) << '\n';
    out << "# end\n";
    if (!out) throw CacheError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw CacheError("cannot move cache file into place: " + ec.message());
}

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& explicit_dir) {
  if (explicit_dir && !explicit_dir->empty()) return *explicit_dir;
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return env;
  return ".cache";
}

}  // namespace widdershins
