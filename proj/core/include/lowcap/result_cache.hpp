#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "lowcap/fer.hpp"

namespace lowcap {

// Content-addressed key over everything that determines a FerPoint.
uint64_t fer_cache_key(uint64_t spec_digest, const ChannelModel& ch, uint32_t list_size,
                       const StopRule& stop, uint64_t seed);

// On-disk JSON store, one file per key, atomic-rename writes. Entries whose
// schema version does not match are ignored; unreadable files are misses.
std::optional<FerPoint> cache_get(const std::filesystem::path& dir, uint64_t key);
void cache_put(const std::filesystem::path& dir, uint64_t key, const FerPoint& point);

std::string fer_point_to_json(const FerPoint& point);
std::optional<FerPoint> fer_point_from_json(const std::string& text);

// FNV-1a over a byte sequence; the digest used for manifests and keys.
uint64_t fnv1a64(const void* data, size_t size, uint64_t seed = 0xcbf29ce484222325ull);

} // namespace lowcap
