#pragma once

// Content-addressed result cache: files named by an FNV-1a hash of the
// canonical key, verified on lookup by comparing the stored key itself.
// Writes are atomic (write to a temp file, then rename).

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "centra/error.hpp"

namespace centra {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

class Cache {
public:
    explicit Cache(std::string dir) : dir_(std::move(dir)) {
        std::filesystem::create_directories(dir_);
    }

    std::optional<nlohmann::json> lookup(const nlohmann::json& key) const {
        std::string k = key.dump();
        std::filesystem::path file = path_for(k);
        if (!std::filesystem::exists(file)) return std::nullopt;
        try {
            std::ifstream in(file);
            nlohmann::json j;
            in >> j;
            if (!j.contains("key") || j["key"].dump() != nlohmann::json::parse(k).dump() ||
                j["key"] != key) {
                std::cerr << "warning: cache entry " << file << " does not match its key; treating as miss\n";
                return std::nullopt;
            }
            return j.at("value");
        } catch (const std::exception& e) {
            std::cerr << "warning: corrupt cache entry " << file << " (" << e.what()
                      << "); treating as miss\n";
            return std::nullopt;
        }
    }

    void store(const nlohmann::json& key, const nlohmann::json& value) const {
        std::string k = key.dump();
        std::filesystem::path file = path_for(k);
        std::filesystem::path tmp = file;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) throw error("cache: cannot write " + tmp.string());
            out << nlohmann::json{{"key", key}, {"value", value}}.dump(2) << "\n";
        }
        std::filesystem::rename(tmp, file);
    }

private:
    std::filesystem::path path_for(const std::string& key) const {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx",
                      static_cast<unsigned long long>(fnv1a64(key)));
        return std::filesystem::path(dir_) / (std::string(buf) + ".json");
    }

    std::string dir_;
};

} // namespace centra
