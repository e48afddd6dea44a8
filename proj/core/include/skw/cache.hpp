#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "skw/session.hpp"
#include "skw/sklyanin.hpp"

namespace skw {

inline constexpr std::uint32_t kCacheVersion = 1;

/// Everything the cached model depends on. seed and window_b pin the
/// projection, which is stored alongside the tensors.
struct CacheKey {
  std::uint64_t modulus = 0;
  std::uint64_t a = 0, b = 0, c = 0;
  std::int32_t orient = 1;
  std::int32_t window_s = 0;
  std::int32_t window_b = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const CacheKey&, const CacheKey&) = default;
};

CacheKey cache_key(const SessionParams& params, const Curve& E);

struct CacheLoad {
  std::optional<GradedAlgebraModel> model;
  /// Set when a cache file exists but was ignored.
  std::string warning;
};

/// Throws Error(IoError) if the file cannot be written.
void save_cache(const std::string& path, const GradedAlgebraModel& model, const CacheKey& key);
/// Missing file: empty result. Other version or key: empty result with a
/// warning. Bad magic, truncation or checksum mismatch: Error(CorruptCache).
CacheLoad load_cache(const std::string& path, const CacheKey& key);

}  // namespace skw
