#include "bcb/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace bcb {

using nlohmann::json;

namespace {

json to_json(const CountResult& r) {
    json j{{"n", r.n},
           {"total", to_decimal(r.total)},
           {"trivial", to_decimal(r.trivial)},
           {"nontrivial", to_decimal(r.nontrivial)},
           {"strategy", to_string(r.strategy)},
           {"elapsed_ms", r.elapsed_ms}};
    if (r.shards) {
        j["shards"] = json{{"prefix_len", r.shards->prefix_len},
                           {"shard_count", r.shards->shard_count}};
    }
    return j;
}

CountResult from_json(const json& j) {
    CountResult r;
    r.n = j.at("n").get<int>();
    r.total = Int(j.at("total").get<std::string>());
    r.trivial = Int(j.at("trivial").get<std::string>());
    r.nontrivial = Int(j.at("nontrivial").get<std::string>());
    r.strategy = j.at("strategy").get<std::string>() == "BruteForce" ? Strategy::BruteForce
                                                                     : Strategy::MeetInMiddle;
    r.elapsed_ms = j.value("elapsed_ms", 0.0);
    if (j.contains("shards")) {
        ShardManifestRef s;
        s.prefix_len = j["shards"].at("prefix_len").get<int>();
        s.shard_count = j["shards"].at("shard_count").get<std::uint32_t>();
        r.shards = s;
    }
    return r;
}

} // namespace

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

std::filesystem::path ResultCache::default_path() {
    if (const char* env = std::getenv("BCB_CACHE")) return env;
    return "bcb_cache.json";
}

ResultCache ResultCache::open(const std::optional<std::filesystem::path>& explicit_path) {
    return ResultCache(explicit_path ? *explicit_path : default_path());
}

void ResultCache::load() {
    std::ifstream in(path_);
    if (!in) return; // a missing cache file is an empty cache
    json doc = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (doc.is_discarded())
        throw std::runtime_error("cache file is not valid JSON: " + path_.string());
    if (doc.value("schema_version", 0) != schema_version)
        throw std::runtime_error("cache schema version mismatch: " + path_.string());
    for (const auto& [key, value] : doc.at("entries").items()) {
        CountResult r = from_json(value);
        entries_.emplace(r.n, std::move(r));
    }
}

std::optional<CountResult> ResultCache::get(int n) const {
    auto it = entries_.find(n);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void ResultCache::put(const CountResult& r) {
    entries_.insert_or_assign(r.n, r); // whole-entry replacement only
}

void ResultCache::save() const {
    json entries = json::object();
    for (const auto& [n, r] : entries_) entries[std::to_string(n)] = to_json(r);
    json doc{{"schema_version", schema_version}, {"entries", entries}};

    std::filesystem::path tmp = path_;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write cache: " + tmp.string());
        out << doc.dump(2) << '\n';
    }
    std::filesystem::rename(tmp, path_);
}

} // namespace bcb
