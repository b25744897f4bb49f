#pragma once

#include <cstddef>
#include <functional>

namespace opnum {

// Worker count: OPNUM_THREADS if set, else hardware concurrency.
int thread_count();
void set_thread_count(int n);

// Runs body(i) for i in [0, n). Each index is handled exactly once and
// results must be written to per-index slots, so output never depends on
// the number of threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace opnum
