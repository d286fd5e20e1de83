#pragma once

#include "hilbfilt/io.hpp"
#include "hilbfilt/version.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

namespace hilbfilt {

/// 128-bit content hash assembled from two FNV-1a passes with distinct
/// offsets; plenty for a content-addressed cache whose hits are
/// spot-checked against recomputation anyway.
inline std::string content_hash(const std::string& bytes) {
    auto fnv = [&bytes](std::uint64_t offset) {
        std::uint64_t h = offset;
        for (unsigned char c : bytes) {
            h ^= c;
            h *= 0x100000001B3ULL;
        }
        return h;
    };
    char buffer[33];
    std::snprintf(buffer, sizeof buffer, "%016llx%016llx",
                  static_cast<unsigned long long>(fnv(0xCBF29CE484222325ULL)),
                  static_cast<unsigned long long>(fnv(0x9AE16A3B2F90404FULL)));
    return std::string(buffer);
}

/// Disk-backed result cache keyed by content hash of the canonical
/// instance encoding plus the tool version (a version bump invalidates
/// everything). HILBFILT_CACHE_DIR overrides the location.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
        std::error_code ec;
        std::filesystem::create_directories(dir_, ec);
        if (ec) throw Error(Error::Code::IoError, "cannot create cache dir " + dir_.string());
    }

    static std::filesystem::path default_dir() {
        if (const char* env = std::getenv("HILBFILT_CACHE_DIR")) return env;
        if (const char* home = std::getenv("HOME"))
            return std::filesystem::path(home) / ".cache" / "hilbfilt";
        return std::filesystem::temp_directory_path() / "hilbfilt-cache";
    }

    const std::filesystem::path& dir() const { return dir_; }

    static std::string key_for(const std::string& canonical_encoding) {
        return content_hash(std::string(kToolVersion) + '\n' + canonical_encoding);
    }

    std::optional<Json> load(const std::string& key) const {
        const std::filesystem::path path = dir_ / (key + ".json");
        std::ifstream in(path);
        if (!in) return std::nullopt;
        Json j = Json::parse(in, nullptr, false);
        if (j.is_discarded()) return std::nullopt; // treat corrupt entries as misses
        if (j.value("toolVersion", "") != kToolVersion) return std::nullopt;
        if (!j.contains("value")) return std::nullopt;
        return j["value"];
    }

    void store(const std::string& key, const Json& value) const {
        Json entry;
        entry["key"] = key;
        entry["toolVersion"] = kToolVersion;
        entry["value"] = value;
        const std::filesystem::path path = dir_ / (key + ".json");
        const std::filesystem::path tmp = dir_ / (key + ".json.tmp");
        {
            std::ofstream out(tmp);
            if (!out) throw Error(Error::Code::IoError, "cannot write cache file " + tmp.string());
            out << entry.dump();
        }
        std::filesystem::rename(tmp, path);
    }

    /// Deterministic spot-check predicate: roughly one hit in sixteen is
    /// recomputed and compared bit for bit.
    static bool should_spot_check(const std::string& key) {
        return !key.empty() && key.back() == '0';
    }

private:
    std::filesystem::path dir_;
};

} // namespace hilbfilt
