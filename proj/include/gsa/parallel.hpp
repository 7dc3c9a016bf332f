#pragma once

#include <cstddef>
#include <functional>

namespace gsa {

/// Number of worker threads used by parallel_for_index: hardware concurrency
/// capped by the GSA_THREADS environment variable (when set and positive).
unsigned thread_cap();

/// Runs fn(i) for i in [0, n) on a static block partition of worker threads.
///
/// Tasks must be independent; callers get determinism by writing to
/// index-addressed slots. The first exception (lowest index) is rethrown
/// after all workers join.
void parallel_for_index(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace gsa
