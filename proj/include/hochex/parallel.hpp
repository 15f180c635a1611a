#pragma once

#include <cstddef>
#include <functional>

namespace hochex {

// Worker count: HOCHEX_THREADS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
std::size_t thread_budget();

// Runs fn(i) for i in [0, n) across up to thread_budget() workers and joins
// before returning.  fn must be safe to run concurrently for distinct i;
// callers keep determinism by writing results into slot i only.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace hochex
