#pragma once

#include <cstddef>
#include <functional>

namespace pmcsolve {

/// Worker count: std::thread::hardware_concurrency(), capped by the
/// PMCSOLVE_THREADS environment variable when set. Always >= 1.
std::size_t worker_threads();

/// Calls fn(i) for i in [0, count), spread over worker_threads() threads.
/// fn must only write to per-index state.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace pmcsolve
