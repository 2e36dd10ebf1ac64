#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "bcb/count.hpp"

namespace bcb {

// Single-file JSON result cache. Integers are stored as decimal strings;
// entries are replaced whole, never edited in place; saves go through a
// temp-file rename.
class ResultCache {
public:
    static constexpr int schema_version = 1;

    explicit ResultCache(std::filesystem::path path);

    // Resolution order: explicit argument, BCB_CACHE env var, ./bcb_cache.json.
    static std::filesystem::path default_path();
    static ResultCache open(const std::optional<std::filesystem::path>& explicit_path = {});

    std::optional<CountResult> get(int n) const;
    void put(const CountResult& r);
    void save() const;

    const std::filesystem::path& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::filesystem::path path_;
    std::map<int, CountResult> entries_;

    void load();
};

} // namespace bcb
