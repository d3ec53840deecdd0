#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "hhodge/engine.hpp"

namespace hhodge {

/// Persistent memo of twisted correlators for one group.
///
///   hhodge-cache v1 <group fingerprint>
///   <canonical key>\t<p>/<q>
///   ...
struct CacheFile {
    std::string fingerprint;
    std::vector<std::pair<std::string, Rational>> entries;

    /// Throws ParseError on malformed content.
    static CacheFile parse(std::string_view text);
    std::string serialize() const;

    /// Missing file reads as an empty cache for the given fingerprint.
    static CacheFile read(const std::filesystem::path& path, const std::string& fingerprint_if_missing);

    /// Write to a temporary file next to path, then rename over it.
    void write_atomic(const std::filesystem::path& path) const;
};

/// Loads a cache into the engine.  Rejects a cache built for another group
/// (ValidationError) and recomputes up to sample_size entries from scratch;
/// any disagreement raises InconsistencyError naming the key.
void load_cache(Engine& engine, const std::filesystem::path& path, std::size_t sample_size = 6);

/// Writes every memoized value of the engine.
void save_cache(const Engine& engine, const std::filesystem::path& path);

}  // namespace hhodge
