#pragma once

// On-disk cache of solve reports, keyed by a SHA-256 of the inputs that determine them.

#include "eqgrass/json_io.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace eqg {

inline constexpr const char* cache_format_version = "eqgrass-solve-1";
inline constexpr const char* cache_dir_env = "EQGRASS_CACHE_DIR";

inline std::string sha256_hex(const std::string& data)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xf];
    }
    return out;
}

struct CacheKey {
    GrassmannParams params;
    Strategy strategy;
    std::string version = cache_format_version;

    std::string digest() const
    {
        std::ostringstream os;
        os << version << '\n'
           << params.k << ' ' << params.p << ' ' << params.q << '\n'
           << strategy.to_string() << '\n';
        return sha256_hex(os.str());
    }
};

/// $EQGRASS_CACHE_DIR, else $XDG_CACHE_HOME/eqgrass, else ~/.cache/eqgrass.
inline std::filesystem::path default_cache_dir()
{
    if (const char* d = std::getenv(cache_dir_env); d && *d)
        return d;
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x)
        return std::filesystem::path(x) / "eqgrass";
    if (const char* h = std::getenv("HOME"); h && *h)
        return std::filesystem::path(h) / ".cache" / "eqgrass";
    return ".eqgrass-cache";
}

class ResultCache {
public:
    using warn_fn = std::function<void(const std::string&)>;

    explicit ResultCache(std::filesystem::path dir, warn_fn warn = {})
        : dir_(std::move(dir)), warn_(std::move(warn))
    {
        if (!warn_)
            warn_ = [](const std::string& m) { std::cerr << "warning: " << m << '\n'; };
    }

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const CacheKey& key) const { return dir_ / (key.digest() + ".json"); }

    /// The cached report, or nullopt on a miss.  Corrupt entries are reported and treated as misses.
    std::optional<SolveReport> load(const CacheKey& key) const
    {
        const auto path = path_for(key);
        std::ifstream in(path, std::ios::binary);
        if (!in)
            return std::nullopt;
        try {
            json j = json::parse(in);
            if (j.at("cache_version").get<std::string>() != key.version)
                throw std::invalid_argument("version mismatch");
            SolveReport r = report_from_json(j.at("report"));
            if (!(r.params == key.params) || !(r.strategy == key.strategy) || !r.complete)
                throw std::invalid_argument("entry does not match its key");
            return r;
        } catch (const std::exception& e) {
            warn_("ignoring corrupt cache entry " + path.string() + ": " + e.what());
            return std::nullopt;
        }
    }

    /// Writes atomically: temp file in the same directory, then rename.
    void store(const CacheKey& key, const SolveReport& report) const
    {
        std::filesystem::create_directories(dir_);
        const auto path = path_for(key);
        const auto tmp = path.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw std::runtime_error("cannot write cache file " + tmp);
            json j{{"cache_version", key.version}, {"report", to_json(report)}};
            out << j.dump(1) << '\n';
            if (!out)
                throw std::runtime_error("failed writing cache file " + tmp);
        }
        std::filesystem::rename(tmp, path);
    }

private:
    std::filesystem::path dir_;
    warn_fn warn_;
};

} // namespace eqg
