#pragma once

#include <filesystem>

#include "rkit/derivation.hpp"

namespace rkit {

// Layout, little-endian throughout:
//   0  "RKSQ"
//   4  u16 version (1)
//   6  u16 level
//   8  u64 source_limit
//  16  u64 certified_count
//  24  u64 element_count
//  32  element_count x u64, strictly increasing
inline constexpr char kCacheMagic[4] = {'R', 'K', 'S', 'Q'};
inline constexpr u64 kCacheVersion = 1;
inline constexpr std::size_t kCacheHeaderSize = 32;

/// Only level, elements, certified_count and source_limit are stored. On
/// read, truncated is false and heuristic is set for levels other than 1, 2.
void cache_write(const DerivedSequence& seq, const std::filesystem::path& path);

/// Throws IoError if the file cannot be opened and CorruptCache (detail =
/// byte offset of the offending field) on any format violation.
DerivedSequence cache_read(const std::filesystem::path& path);

/// $RKIT_CACHE_DIR, or an empty path when unset.
std::filesystem::path default_cache_dir();

/// <dir>/level<K>_limit<N>.rksq
std::filesystem::path cache_file_name(const std::filesystem::path& dir, int level, u64 limit);

}  // namespace rkit
