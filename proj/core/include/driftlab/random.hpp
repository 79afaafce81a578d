#pragma once

#include <cstdint>
#include <string_view>

namespace driftlab {

/// Deterministic, platform-independent random stream (splitmix64 core).
///
/// All sampling in the library goes through SeedStream so that runs are
/// bit-reproducible across machines and standard-library versions. Streams
/// are cheap value types; fork() derives an independent child stream and
/// advances the parent, so successive forks never collide.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Standard normal via Box-Muller (pairs cached).
  double normal();

  /// Uniform integer in [0, n). Requires n >= 1.
  int uniform_int(int n);

  SeedStream fork(std::uint64_t tag);
  SeedStream fork(std::string_view label);

  // State accessors for checkpoint/resume.
  std::uint64_t state() const { return state_; }
  bool has_cached_normal() const { return has_cached_; }
  double cached_normal() const { return cached_; }
  void restore(std::uint64_t state, bool has_cached, double cached) {
    state_ = state;
    has_cached_ = has_cached;
    cached_ = cached;
  }

 private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

/// FNV-1a 64-bit hash, used for stream labels, config hashes and checksums.
std::uint64_t fnv1a(const void* bytes, std::size_t len,
                    std::uint64_t seed = 14695981039346656037ULL);
std::uint64_t fnv1a(std::string_view s,
                    std::uint64_t seed = 14695981039346656037ULL);

}  // namespace driftlab
