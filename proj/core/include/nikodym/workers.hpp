#pragma once

#include <cstddef>
#include <functional>

namespace nikodym {

/// Name of the environment variable holding the worker-thread count.
inline constexpr const char* kWorkersEnv = "NIKODYM_WORKERS";

/// Worker count from NIKODYM_WORKERS, else the hardware concurrency (at least 1).
std::size_t worker_count();

/// Splits [0, count) into contiguous chunks, one per worker, and calls
/// body(worker, begin, end) for each. Blocks until all chunks finish and
/// rethrows the first exception raised by any chunk.
void parallel_chunks(std::size_t count, std::size_t workers,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace nikodym
