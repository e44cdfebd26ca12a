#pragma once

#include <cstdint>
#include <functional>

namespace uvmesh {

/// Worker cap: min(hardware_concurrency, UVT_THREADS) with UVT_THREADS read
/// once per call. Values < 1 are treated as 1.
int thread_count();

/// Runs fn(begin, end) on disjoint index chunks of [0, n). Chunks are
/// contiguous, so callers that only write to their own indices get
/// thread-count-independent results.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace uvmesh
