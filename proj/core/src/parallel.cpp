#include "cwscaler/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace cw {

namespace {
std::atomic<int> g_maxThreads{0};
constexpr std::int64_t kChunk = 1 << 14;
}  // namespace

void set_max_threads(int threads) { g_maxThreads.store(threads < 0 ? 0 : threads); }

int max_threads() {
  const int t = g_maxThreads.load();
  if (t > 0) return t;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& chunkFn) {
  const std::int64_t total = end - begin;
  if (total <= 0) return;
  const std::int64_t nChunks = (total + kChunk - 1) / kChunk;
  const int workers = static_cast<int>(
      std::min<std::int64_t>(nChunks, static_cast<std::int64_t>(max_threads())));
  if (workers <= 1) {
    chunkFn(begin, end);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= nChunks) return;
      const std::int64_t lo = begin + c * kChunk;
      const std::int64_t hi = std::min(end, lo + kChunk);
      chunkFn(lo, hi);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers - 1));
  for (int i = 0; i < workers - 1; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace cw
