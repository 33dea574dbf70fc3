#pragma once

#include <cstdint>
#include <random>

namespace auctionsim {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-trial seed derived from a root seed: hash(root XOR trial index).
// Trials seeded this way are independent streams and reproduce exactly.
inline std::uint64_t split_seed(std::uint64_t root, std::uint64_t trial_index) {
  return splitmix64(root ^ trial_index);
}

// Deterministic random source owned by a single run. Identical seeds
// reproduce identical draw sequences bit-for-bit; uniform01() avoids
// std::uniform_real_distribution so the stream does not depend on the
// standard library implementation.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool coin() { return (next_u64() & 1ULL) != 0; }

  // zero-based index in [0, n)
  std::uint64_t index(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace auctionsim
