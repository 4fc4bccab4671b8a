#pragma once

#include <cstdint>
#include <functional>

namespace cw {

/// Caps the number of worker threads used by parallel_for. Zero restores the
/// default (hardware concurrency). Set once from the CLI --threads flag.
void set_max_threads(int threads);
int max_threads();

/// Runs chunkFn(begin, end) over fixed-size chunks of [begin, end) on a small
/// worker pool. Chunk boundaries depend only on the range, so work that writes
/// to disjoint slots is deterministic regardless of thread count or schedule.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t, std::int64_t)>& chunkFn);

}  // namespace cw
