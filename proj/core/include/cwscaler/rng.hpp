#pragma once

#include <cstdint>
#include <random>

namespace cw {

/// Identifies a reproducible random stream. Equal (seed, streamId) pairs
/// reproduce identical draws bit-for-bit on one build; parallel workers get
/// distinct streamIds.
struct RngSpec {
  std::uint64_t seed = 0;
  std::uint64_t streamId = 0;
};

/// mt19937_64 seeded through a splitmix64 mix of (seed, streamId), with the
/// variate transforms pinned here (not the implementation-defined std
/// distributions) so paths are stable.
class RngStream {
 public:
  explicit RngStream(RngSpec spec);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform01();

  /// Strictly positive exponential variate with the given rate.
  double exponential(double rate);

  /// Standard normal via Box-Muller; generates in pairs and caches one.
  double normal();

  /// Uniform integer on [0, n), rejection sampled (no modulo bias).
  std::int64_t uniform_int(std::int64_t n);

 private:
  std::mt19937_64 engine_;
  double cachedNormal_ = 0.0;
  bool hasCachedNormal_ = false;
};

}  // namespace cw
