#pragma once

#include <cstddef>
#include <functional>

namespace stabledrift {

// Worker count: STABLEDRIFT_THREADS when set and positive, otherwise the
// given fallback (0 fallback means hardware concurrency).
unsigned worker_count_from_env(unsigned fallback = 0);

// Runs body(0..n-1) across up to n_threads workers. Index assignment is
// work-stealing, so bodies must depend only on their index (each replicate
// derives its own random stream); results written per index are identical for
// every thread count. The first exception thrown by a body is rethrown.
void parallel_for(std::size_t n, unsigned n_threads,
                  const std::function<void(std::size_t)>& body);

} // namespace stabledrift
