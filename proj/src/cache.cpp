#include "knottrace/cache.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace knottrace {

namespace fs = std::filesystem;

fs::path ResultCache::default_dir() {
    if (const char* env = std::getenv("KNOTTRACE_CACHE_DIR")) return fs::path(env);
    if (const char* home = std::getenv("HOME"))
        return fs::path(home) / ".cache" / "knottrace";
    return fs::path(".knottrace-cache");
}

ResultCache::ResultCache(bool enabled) : enabled_(enabled), dir_(default_dir()) {
    if (!enabled_) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) enabled_ = false;
}

std::optional<std::string> ResultCache::lookup(const std::string& digest) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(dir_ / digest, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream body;
    body << in.rdbuf();
    if (!in.good() && !in.eof()) return std::nullopt;
    return body.str();
}

void ResultCache::store(const std::string& digest, const std::string& body) const {
    if (!enabled_) return;
    std::error_code ec;
    fs::path tmp = dir_ / (digest + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) return;
        out << body;
        if (!out.good()) {
            out.close();
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, dir_ / digest, ec);
    if (ec) fs::remove(tmp, ec);
}

}  // namespace knottrace
