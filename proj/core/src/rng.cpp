#include "cwscaler/rng.hpp"

#include <cmath>

namespace cw {

namespace {

// splitmix64; used only to turn (seed, streamId) into engine seed material.
std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_engine(RngSpec spec) {
  std::uint64_t st = spec.seed;
  (void)splitmix64(st);
  st ^= 0xA5A5A5A5A5A5A5A5ULL + spec.streamId;
  std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(st)),
                    static_cast<std::uint32_t>(splitmix64(st) >> 32),
                    static_cast<std::uint32_t>(splitmix64(st)),
                    static_cast<std::uint32_t>(splitmix64(st) >> 32),
                    static_cast<std::uint32_t>(splitmix64(st)),
                    static_cast<std::uint32_t>(splitmix64(st) >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(RngSpec spec) : engine_(make_engine(spec)) {}

double RngStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::exponential(double rate) {
  // (x + 0.5) * 2^-53 lies strictly inside (0, 1), so the variate is finite
  // and strictly positive: CTMC holding times must never be zero.
  const double u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  return -std::log(u) / rate;
}

double RngStream::normal() {
  if (hasCachedNormal_) {
    hasCachedNormal_ = false;
    return cachedNormal_;
  }
  const double u1 = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * 3.14159265358979323846 * u2;
  cachedNormal_ = r * std::sin(a);
  hasCachedNormal_ = true;
  return r * std::cos(a);
}

std::int64_t RngStream::uniform_int(std::int64_t n) {
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::int64_t>(x % un);
}

}  // namespace cw
