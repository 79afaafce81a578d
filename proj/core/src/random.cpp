#include "driftlab/random.hpp"

#include <cmath>

#include "driftlab/error.hpp"

namespace driftlab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SeedStream::next_u64() { return splitmix64(state_); }

double SeedStream::uniform() {
  // 53 high bits -> [0, 1)
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SeedStream::normal() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller; u1 in (0,1] to keep the log finite.
  double u1 = 1.0 - uniform();
  double u2 = uniform();
  double r = std::sqrt(-2.0 * std::log(u1));
  double theta = 2.0 * 3.14159265358979323846 * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

int SeedStream::uniform_int(int n) {
  if (n < 1) throw ContractError("uniform_int: n must be >= 1");
  // Rejection-free modulo is fine here: n is tiny relative to 2^64.
  return static_cast<int>(next_u64() % static_cast<std::uint64_t>(n));
}

SeedStream SeedStream::fork(std::uint64_t tag) {
  std::uint64_t base = next_u64();
  std::uint64_t child = base ^ (tag * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL);
  return SeedStream(child);
}

SeedStream SeedStream::fork(std::string_view label) { return fork(fnv1a(label)); }

std::uint64_t fnv1a(const void* bytes, std::size_t len, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

std::uint64_t fnv1a(std::string_view s, std::uint64_t seed) {
  return fnv1a(s.data(), s.size(), seed);
}

}  // namespace driftlab
