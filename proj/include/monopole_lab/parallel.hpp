#pragma once
// Minimal deterministic parallel loop: results must be written to per-index slots.
#include <functional>

namespace monopole_lab {

/// Thread budget: MONOPOLE_LAB_THREADS if set (>= 1), else hardware concurrency.
int thread_cap();

/// Runs body(i) for i in [0, n) on up to `threads` workers (static striping).
/// The first exception thrown by any worker is rethrown on the caller's thread.
void parallel_for(int n, int threads, const std::function<void(int)>& body);

}  // namespace monopole_lab
