#include "linec4/block_cache.hpp"

#include <cstdlib>
#include <fstream>
#include <memory>

#include "linec4/errors.hpp"

namespace linec4 {

using nlohmann::json;

BlockCache::BlockCache(std::filesystem::path file) : path_(std::move(file)) {
  std::ifstream in(*path_);
  if (!in) return;
  try {
    json doc = json::parse(in);
    if (doc.value("format_version", 0) == kCacheFormatVersion && doc.contains("entries") &&
        doc["entries"].is_object()) {
      entries_ = std::move(doc["entries"]);
    }
  } catch (const json::exception&) {
    entries_ = json::object();
  }
}

std::optional<json> BlockCache::get(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return *it;
}

void BlockCache::put(const std::string& key, json entry) {
  std::unique_lock lock(mutex_);
  entries_[key] = std::move(entry);
  save_locked();
}

void BlockCache::evict(const std::string& key) {
  std::unique_lock lock(mutex_);
  entries_.erase(key);
  save_locked();
}

void BlockCache::clear() {
  std::unique_lock lock(mutex_);
  entries_ = json::object();
  save_locked();
}

std::size_t BlockCache::size() const {
  std::shared_lock lock(mutex_);
  return entries_.size();
}

void BlockCache::save_locked() const {
  if (!path_) return;
  std::error_code ec;
  if (path_->has_parent_path()) std::filesystem::create_directories(path_->parent_path(), ec);
  const auto tmp = std::filesystem::path(path_->string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) return;  // a read-only cache location degrades to memory-only
    json doc = {{"format_version", kCacheFormatVersion}, {"entries", entries_}};
    out << doc.dump(1) << '\n';
  }
  std::filesystem::rename(tmp, *path_, ec);
}

namespace {

std::mutex g_default_mutex;
std::shared_ptr<BlockCache> g_default = std::make_shared<BlockCache>();

}  // namespace

BlockCache& default_cache() {
  std::lock_guard lock(g_default_mutex);
  return *g_default;
}

void configure_default_cache(std::optional<std::filesystem::path> file) {
  std::lock_guard lock(g_default_mutex);
  g_default = file ? std::make_shared<BlockCache>(*file) : std::make_shared<BlockCache>();
}

std::filesystem::path default_cache_path() {
  if (const char* xdg = std::getenv("XDG_DATA_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "linec4" / "blocks.json";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".local" / "share" / "linec4" / "blocks.json";
  }
  return std::filesystem::path("linec4-blocks.json");
}

json encode_vertex(VertexId v) {
  if (v.is_pair()) return json::array({v.row(), v.col()});
  return v.index();
}

VertexId decode_vertex(const json& j) {
  if (j.is_number_unsigned()) return VertexId::plain(j.get<std::uint32_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_unsigned() && j[1].is_number_unsigned()) {
    return VertexId::pair(j[0].get<std::uint32_t>(), j[1].get<std::uint32_t>());
  }
  throw DocumentError("malformed vertex: " + j.dump());
}

json encode_cycles(const Decomposition& d) {
  json out = json::array();
  for (const auto& c : d.cycles) {
    json cyc = json::array();
    for (const auto& v : c.vertices()) cyc.push_back(encode_vertex(v));
    out.push_back(std::move(cyc));
  }
  return out;
}

Decomposition decode_cycles(const json& j) {
  if (!j.is_array()) throw DocumentError("cycles must be an array");
  Decomposition d;
  d.cycles.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& c = j[i];
    if (!c.is_array() || c.size() != 4) {
      throw DocumentError("cycle #" + std::to_string(i) + " must list 4 vertices");
    }
    try {
      d.add(FourCycle(decode_vertex(c[0]), decode_vertex(c[1]), decode_vertex(c[2]),
                      decode_vertex(c[3])));
    } catch (const InvalidCycleError& e) {
      throw DocumentError("cycle #" + std::to_string(i) + ": " + e.what());
    }
  }
  return d;
}

}  // namespace linec4
