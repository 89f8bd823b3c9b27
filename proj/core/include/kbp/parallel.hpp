#pragma once

#include <cstddef>
#include <functional>

namespace kbp {

/// Worker count from KBP_THREADS, else hardware concurrency (at least 1).
int default_worker_count();

/// Calls fn(i) for i in [0, count) on up to `workers` threads (0 = default_worker_count()).
/// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &fn, int workers = 0);

}  // namespace kbp
