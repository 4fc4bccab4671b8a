#pragma once

#include <cstdint>
#include <vector>

namespace cw {

/// A +-1 spin configuration with a cached up-spin count k = #{i : s_i = +1}.
/// The canonical coordinate everywhere is the integer k; magnetization is a
/// derived view m = (2k - n) / n.
struct SpinState {
  std::vector<std::int8_t> spins;
  std::int64_t upCount = 0;

  std::int64_t n() const { return static_cast<std::int64_t>(spins.size()); }

  double magnetization() const {
    return static_cast<double>(2 * upCount - n()) / static_cast<double>(n());
  }

  /// Recounts +1 entries; used to check the cache invariant in tests.
  std::int64_t recount() const {
    std::int64_t k = 0;
    for (auto s : spins) k += (s > 0);
    return k;
  }

  static SpinState all_up(std::int64_t n) {
    return SpinState{std::vector<std::int8_t>(static_cast<std::size_t>(n), +1), n};
  }
  static SpinState all_down(std::int64_t n) {
    return SpinState{std::vector<std::int8_t>(static_cast<std::size_t>(n), -1), 0};
  }
  static SpinState from_spins(std::vector<std::int8_t> s) {
    SpinState st{std::move(s), 0};
    st.upCount = st.recount();
    return st;
  }
};

}  // namespace cw
