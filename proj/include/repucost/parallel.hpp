#pragma once

#include <cstddef>
#include <functional>

namespace repu {

// Global cap on worker threads used by library internals. 0 means "use hardware concurrency".
void set_max_threads(int n);
int max_threads();

// Runs body(i) for i in [0, n). Chunks are contiguous so results written by index are
// independent of the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace repu
