#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace polycomp {

// Worker cap: explicit argument > 0 wins, then POLYC_THREADS, then hardware
// concurrency.
int resolve_thread_count(int requested = 0);

// Runs fn(0..n-1) on up to `threads` workers (atomic work stealing). fn must
// be safe to call concurrently for distinct indices; exceptions propagate
// from the first failing index.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace polycomp
