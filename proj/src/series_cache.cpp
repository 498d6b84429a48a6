#include <fstream>
#include <sstream>
#include <thread>

#include "tracepoincare/molien.hpp"
#include "tracepoincare/serialization.hpp"

namespace tracepoincare::molien {

namespace fs = std::filesystem;

SeriesCache::SeriesCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path SeriesCache::entry_path(const ProblemSpec& spec, int order) const {
  std::ostringstream name;
  name << "molien_n" << spec.n << "_k" << spec.k << '_' << to_string(spec.ring) << "_D" << order << ".json";
  return dir_ / name.str();
}

std::optional<TruncatedSeries> SeriesCache::load(const ProblemSpec& spec, int order) const {
  std::ifstream in(entry_path(spec, order));
  if (!in) return std::nullopt;
  try {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (doc.value("engine", "") != kEngineVersion) return std::nullopt;
    if (doc.at("n") != spec.n || doc.at("k") != spec.k || doc.at("ring") != to_string(spec.ring) ||
        doc.at("order") != order) {
      return std::nullopt;
    }
    TruncatedSeries s = series_from_json(doc.at("coefficients"));
    if (s.order() != order) return std::nullopt;
    return s;
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void SeriesCache::store(const ProblemSpec& spec, int order, const TruncatedSeries& series) const {
  fs::create_directories(dir_);
  nlohmann::json doc = {{"engine", kEngineVersion},
                        {"n", spec.n},
                        {"k", spec.k},
                        {"ring", to_string(spec.ring)},
                        {"order", order},
                        {"coefficients", to_json(series)}};
  // Readers see either the old entry or the complete new one.
  const fs::path final_path = entry_path(spec, order);
  fs::path tmp = final_path;
  tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << doc.dump() << '\n';
  }
  fs::rename(tmp, final_path);
}

TruncatedSeries cached_molien_series(const ProblemSpec& spec, int order, const SeriesCache* cache,
                                     const MolienOptions& options) {
  if (cache) {
    if (auto hit = cache->load(spec, order)) return *hit;
  }
  TruncatedSeries s = molien_series(spec, order, options);
  if (cache) cache->store(spec, order, s);
  return s;
}

}  // namespace tracepoincare::molien
