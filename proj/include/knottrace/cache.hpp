#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace knottrace {

// Content-addressed result cache: one file per digest holding a rendered
// results body.  Advisory only; every operation degrades to a no-op on I/O
// trouble, and writers go through a temp file plus rename so concurrent
// processes never see partial bodies.  KNOTTRACE_CACHE_DIR overrides the
// location.
class ResultCache {
public:
    explicit ResultCache(bool enabled);

    std::optional<std::string> lookup(const std::string& digest) const;
    void store(const std::string& digest, const std::string& body) const;

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }

    static std::filesystem::path default_dir();

private:
    bool enabled_ = false;
    std::filesystem::path dir_;
};

}  // namespace knottrace
