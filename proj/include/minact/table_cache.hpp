#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "minact/character.hpp"

namespace minact {

/// JSON encoding of a character table; integers only.
std::string table_to_json(const CharacterTable& table);
CharacterTable table_from_json(const std::string& text);

/// Loads the cached table for G's canonical hash, or computes and stores it.
/// A missing, corrupt or stale cache file is rebuilt silently; writes are
/// atomic (temp file + rename). An empty cache_dir disables caching.
CharacterTable character_table_cached(const FiniteGroup& G,
                                      const std::filesystem::path& cache_dir);

/// Cache file name for a group hash.
std::string table_cache_filename(uint64_t group_hash);

} // namespace minact
