#include "bei/cache.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace bei {

namespace {

std::string now_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

json betti_to_json(const BettiTable& t) {
    json arr = json::array();
    for (const auto& [ij, b] : t.entries)
        arr.push_back(json::array({ij.first, ij.second, b}));
    return arr;
}

BettiTable betti_from_json(const json& arr) {
    BettiTable t;
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 3) throw std::runtime_error("bad betti entry");
        t.entries[{e[0].get<int>(), e[1].get<int>()}] = e[2].get<long>();
    }
    return t;
}

} // namespace

ResultCache::ResultCache(std::string directory) : dir_(std::move(directory)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw std::runtime_error("cache: cannot create directory " + dir_ + ": " + ec.message());
}

std::string ResultCache::path_for(const std::string& key, uint32_t characteristic) const {
    return dir_ + "/" + key + "-p" + std::to_string(characteristic) + ".json";
}

std::optional<CacheEntry> ResultCache::get(const std::string& key, uint32_t characteristic) const {
    std::lock_guard<std::mutex> lk(mutex_);
    std::string path = path_for(key, characteristic);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        if (j.at("engine_version").get<std::string>() != kEngineVersion) return std::nullopt;
        if (j.at("char").get<uint32_t>() != characteristic) return std::nullopt;
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        CacheEntry e;
        e.key = key;
        e.characteristic = characteristic;
        e.n = j.at("n").get<int>();
        e.reg = j.at("reg").get<int>();
        e.betti = betti_from_json(j.at("betti"));
        e.engine_version = kEngineVersion;
        e.created_at = j.value("created_at", "");
        return e;
    } catch (const std::exception& ex) {
        std::cerr << "warning: corrupt cache file " << path << " (" << ex.what()
                  << "); treating as a miss\n";
        return std::nullopt;
    }
}

void ResultCache::put(const CacheEntry& entry) {
    std::lock_guard<std::mutex> lk(mutex_);
    json j;
    j["engine_version"] = entry.engine_version;
    j["key"] = entry.key;
    j["char"] = entry.characteristic;
    j["n"] = entry.n;
    j["reg"] = entry.reg;
    j["betti"] = betti_to_json(entry.betti);
    j["created_at"] = entry.created_at.empty() ? now_iso8601() : entry.created_at;

    std::string path = path_for(entry.key, entry.characteristic);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cache: cannot write " + tmp);
        out << j.dump(2) << "\n";
        if (!out.good()) throw std::runtime_error("cache: write failed for " + tmp);
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("cache: rename failed for " + path + ": " + ec.message());
}

} // namespace bei
