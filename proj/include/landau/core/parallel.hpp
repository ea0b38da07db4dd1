#pragma once

#include <cstddef>
#include <functional>

namespace landau {

// Caps intra-operation parallelism. Initialized from LANDAU_KIT_THREADS when set.
void set_thread_cap(int n);
int thread_cap();

// Runs body(i) for i in [0, n), split into contiguous chunks over at most thread_cap() threads.
// Each index is handled by exactly one call, so results do not depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace landau
