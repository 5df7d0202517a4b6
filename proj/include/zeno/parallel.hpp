#pragma once

#include <cstddef>
#include <functional>

namespace zeno {

// Worker count: ZENO_LAB_THREADS if set to a positive integer, otherwise
// hardware concurrency.
int worker_count();

// Runs body(0..n-1) across workers. Each index owns its output slot, so
// results are identical for any worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace zeno
