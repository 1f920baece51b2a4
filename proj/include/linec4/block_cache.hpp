#pragma once

// Persistent store for solver-backed building blocks. Entries are plain JSON
// and are re-verified by the caller on every load; anything that fails is
// evicted and recomputed.

#include <cstddef>
#include <filesystem>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>

#include "json.hpp"
#include "linec4/multigraph.hpp"

namespace linec4 {

inline constexpr int kCacheFormatVersion = 1;

class BlockCache {
 public:
  /// In-memory only.
  BlockCache() = default;
  /// Backed by `file`; an unreadable or malformed file starts empty.
  explicit BlockCache(std::filesystem::path file);

  std::optional<nlohmann::json> get(const std::string& key) const;
  /// Stores and, when file-backed, rewrites the file.
  void put(const std::string& key, nlohmann::json entry);
  void evict(const std::string& key);
  void clear();

  std::size_t size() const;
  const std::optional<std::filesystem::path>& path() const { return path_; }

 private:
  void save_locked() const;

  mutable std::shared_mutex mutex_;
  std::optional<std::filesystem::path> path_;
  nlohmann::json entries_ = nlohmann::json::object();
};

/// Process-wide cache used by the blocks module. Memory-only until a path is
/// configured.
BlockCache& default_cache();
/// Replaces the process-wide cache (nullopt: memory-only).
void configure_default_cache(std::optional<std::filesystem::path> file);

/// ~/.local/share/linec4/blocks.json, honouring XDG_DATA_HOME.
std::filesystem::path default_cache_path();

// Vertex and cycle encoding shared by the cache and the document format:
// Plain(k) is written as k, Pair(i, j) as [i, j].
nlohmann::json encode_vertex(VertexId v);
VertexId decode_vertex(const nlohmann::json& j);
nlohmann::json encode_cycles(const Decomposition& d);
/// Throws DocumentError on malformed input or a cycle with repeated vertices.
Decomposition decode_cycles(const nlohmann::json& j);

}  // namespace linec4
