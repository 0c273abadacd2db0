#pragma once

#include <mutex>
#include <optional>
#include <string>

#include "bei/resolution.hpp"

namespace bei {

inline constexpr const char* kEngineVersion = "0.1.0";

/// One cached computation: the Betti table of S/J_G for a canonical graph key
/// and coefficient characteristic. Entries from another engine version or
/// characteristic never hit.
struct CacheEntry {
    std::string key; // canonical form, hex
    uint32_t characteristic = 0;
    int n = 0;
    int reg = 0;
    BettiTable betti;
    std::string engine_version = kEngineVersion;
    std::string created_at; // ISO 8601, informational only
};

/// Directory of per-graph JSON records. Reads tolerate corrupt files (warn on
/// stderr, treat as a miss); writes are atomic via rename. Thread-safe.
class ResultCache {
public:
    explicit ResultCache(std::string directory);

    const std::string& directory() const { return dir_; }

    std::optional<CacheEntry> get(const std::string& key, uint32_t characteristic) const;
    void put(const CacheEntry& entry);

private:
    std::string path_for(const std::string& key, uint32_t characteristic) const;

    std::string dir_;
    mutable std::mutex mutex_;
};

} // namespace bei
