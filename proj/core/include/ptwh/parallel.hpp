#pragma once

#include <cstddef>
#include <functional>

namespace ptwh {

/// Resolves a worker count: `requested` if positive, else the
/// PTWH_THREADS environment variable, else hardware concurrency.
int resolve_thread_count(int requested);

/// Runs body(0..n-1) on a bounded worker pool. Each index must be an
/// independent work item writing only to its own output slot; results
/// are then identical for any worker count. The first exception thrown
/// by a work item is rethrown on the calling thread after all workers
/// finish.
void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace ptwh
