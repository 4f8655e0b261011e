#pragma once

#include <cstddef>
#include <functional>

namespace schwarzian {

/// Number of worker threads: hardware concurrency, capped by the
/// SCHWARZIAN_THREADS environment variable when it holds a positive integer.
std::size_t worker_count();

/// Calls fn(i) for every i in [0, n). Work is split into contiguous blocks,
/// one per worker; fn must only write to per-index state.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace schwarzian
