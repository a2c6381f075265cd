#pragma once

#include <cstddef>
#include <functional>

namespace segmin {

// Worker cap used by parallel_for: `requested` if positive, else the
// SEGMIN_THREADS environment variable, else the hardware concurrency.
int effective_threads(int requested = 0);

// Runs fn(0..count-1) on up to `threads` workers (resolved through
// effective_threads). Results must be written to index-addressed slots so
// output never depends on scheduling. The first exception, if any, is
// rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn,
                  int threads = 0);

}  // namespace segmin
