#pragma once

// On-disk, write-once cache of coefficient tables. One JSON document per
// (family, D, G, N) block:
//
//   { "schema": "cuegenus.cache/1", "family": "F", "D": 20, "G": 2, "N": 0,
//     "checksum": "fnv1a64:<hex>", "payload": <GenusTable or QSeries document> }
//
// The checksum covers payload.dump(). A document that fails to parse, has the
// wrong schema or key, or fails its checksum raises CacheIntegrityError.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cuegenus/hurwitz.hpp"
#include "cuegenus/serialize.hpp"

namespace cuegenus {

inline constexpr const char* kCacheSchema = "cuegenus.cache/1";
inline constexpr const char* kCacheDirEnv = "CUEGENUS_CACHE_DIR";

class CacheIntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string fnv1a64_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return "fnv1a64:" + os.str();
}

struct CacheKey {
  Family family = Family::H;
  int D = 0;
  int G = 0;  // 0 when the family has no genus index
  int N = 0;  // 0 when the family has no N

  std::string file_name() const {
    return to_string(family) + "_D" + std::to_string(D) + "_G" + std::to_string(G) + "_N" +
           std::to_string(N) + ".json";
  }
  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

class CoefficientCache {
 public:
  explicit CoefficientCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& directory() const { return dir_; }

  /// The cached payload, or nullopt on a miss.
  std::optional<json> load(const CacheKey& key) const {
    const auto path = dir_ / key.file_name();
    if (!std::filesystem::exists(path)) return std::nullopt;
    json doc = read_document(path);
    if (doc.at("family").get<std::string>() != to_string(key.family) ||
        doc.at("D").get<int>() != key.D || doc.at("G").get<int>() != key.G ||
        doc.at("N").get<int>() != key.N) {
      throw CacheIntegrityError("cache file " + path.string() + " does not match its key");
    }
    return doc.at("payload");
  }

  /// Write-once: storing a different payload under an existing key is an error.
  void store(const CacheKey& key, const json& payload) const {
    const auto path = dir_ / key.file_name();
    if (auto existing = load(key)) {
      if (existing->dump() != payload.dump()) {
        throw CacheIntegrityError("cache file " + path.string() + " disagrees with a recomputation");
      }
      return;
    }
    json doc{{"schema", kCacheSchema},
             {"family", to_string(key.family)},
             {"D", key.D},
             {"G", key.G},
             {"N", key.N},
             {"checksum", fnv1a64_hex(payload.dump())},
             {"payload", payload}};
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
      out << doc.dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
  }

  struct Entry {
    std::filesystem::path path;
    bool ok = false;
    std::string detail;  // "family D G N" when ok, the failure otherwise
  };

  std::vector<Entry> inspect() const {
    std::vector<Entry> out;
    for (const auto& f : sorted_files()) {
      Entry e{f, false, {}};
      try {
        json doc = read_document(f);
        e.ok = true;
        e.detail = doc.at("family").get<std::string>() + " D=" + std::to_string(doc.at("D").get<int>()) +
                   " G=" + std::to_string(doc.at("G").get<int>()) +
                   " N=" + std::to_string(doc.at("N").get<int>());
      } catch (const std::exception& ex) {
        e.detail = ex.what();
      }
      out.push_back(std::move(e));
    }
    return out;
  }

  /// Removes corrupt documents (or every document when all is set); returns the count.
  std::size_t gc(bool all = false) const {
    std::size_t removed = 0;
    for (const auto& e : inspect()) {
      if (all || !e.ok) {
        std::filesystem::remove(e.path);
        ++removed;
      }
    }
    return removed;
  }

 private:
  std::vector<std::filesystem::path> sorted_files() const {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
      if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    return files;
  }

  static json read_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheIntegrityError("cannot read cache file " + path.string());
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& ex) {
      throw CacheIntegrityError("cache file " + path.string() + " is not valid JSON: " + ex.what());
    }
    try {
      if (doc.at("schema").get<std::string>() != kCacheSchema) {
        throw CacheIntegrityError("cache file " + path.string() + " has an unknown schema");
      }
      if (doc.at("checksum").get<std::string>() != fnv1a64_hex(doc.at("payload").dump())) {
        throw CacheIntegrityError("cache file " + path.string() + " fails its checksum");
      }
      (void)doc.at("family").get<std::string>();
      (void)doc.at("D").get<int>();
      (void)doc.at("G").get<int>();
      (void)doc.at("N").get<int>();
    } catch (const json::exception& ex) {
      throw CacheIntegrityError("cache file " + path.string() + " is malformed: " + ex.what());
    }
    return doc;
  }

  std::filesystem::path dir_;
};

/// Coefficient tables, memoized through an optional on-disk cache.
class TableStore {
 public:
  TableStore() = default;
  explicit TableStore(std::optional<CoefficientCache> cache) : cache_(std::move(cache)) {}

  const std::optional<CoefficientCache>& cache() const { return cache_; }

  GenusTable h_table(int D, int G) const {
    return table({Family::H, D, G, 0}, [&] { return k_genus_table(D, G); });
  }
  GenusTable b_table(int D, int G) const {
    return table({Family::B, D, G, 0}, [&] { return b_genus_table(D, G); });
  }
  GenusTable f_table(int D, int G) const {
    return table({Family::F, D, G, 0}, [&] { return bivariate_log(h_table(D, G)); });
  }
  GenusTable c_table(int D, int G) const {
    return table({Family::C, D, G, 0}, [&] { return bivariate_log(b_table(D, G)); });
  }

  QSeries kn_series(int N, int D) const {
    const CacheKey key{Family::KN, D, 0, N};
    if (cache_) {
      if (auto hit = cache_->load(key)) return decode(key, [&] { return qseries_from_json(*hit); });
    }
    QSeries s = cuegenus::kn_series(N, D);
    if (cache_) cache_->store(key, to_json(s));
    return s;
  }

 private:
  template <typename Decode>
  static auto decode(const CacheKey& key, Decode&& run) -> decltype(run()) {
    try {
      return run();
    } catch (const std::invalid_argument& ex) {
      throw CacheIntegrityError("cache entry " + key.file_name() + " has a bad payload: " + ex.what());
    } catch (const json::exception& ex) {
      throw CacheIntegrityError("cache entry " + key.file_name() + " has a bad payload: " + ex.what());
    }
  }

  template <typename Compute>
  GenusTable table(const CacheKey& key, Compute&& compute) const {
    if (cache_) {
      if (auto hit = cache_->load(key)) return decode(key, [&] { return genus_table_from_json(*hit); });
    }
    GenusTable t = compute();
    if (cache_) cache_->store(key, to_json(t));
    return t;
  }

  std::optional<CoefficientCache> cache_;
};

}  // namespace cuegenus
