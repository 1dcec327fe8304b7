#pragma once

#include <cstddef>
#include <functional>

namespace boolfn {

/// Worker count from BOOLFN_THREADS, else hardware concurrency (at least 1).
int default_thread_count();

/// Runs body(begin, end) over contiguous chunks of [0, n) on up to `threads`
/// workers. Chunks are disjoint; callers write results into per-index slots so
/// the outcome never depends on scheduling.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, std::size_t)>& body,
                  std::size_t chunk = 256);

}  // namespace boolfn
