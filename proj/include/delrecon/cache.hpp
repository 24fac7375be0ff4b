#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>

#include "delrecon/search.hpp"

namespace delrecon {

/// A cache file exists but cannot be trusted (unparseable or missing fields).
struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// DELRECON_CACHE_DIR when set, otherwise ./.delrecon-cache.
std::filesystem::path cache_directory();

/// Persists a search report keyed by (n, d, t, engine version).
void cache_store(const SearchReport& report,
                 const std::filesystem::path& dir = cache_directory());

/// Loads a previously stored report. Absent keys and entries written by a
/// different engine version yield nullopt; corrupt files throw CacheError.
std::optional<SearchReport> cache_load(int n, int d, int t,
                                       const std::filesystem::path& dir = cache_directory());

}  // namespace delrecon
