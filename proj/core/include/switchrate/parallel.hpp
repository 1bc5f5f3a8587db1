#pragma once

#include <cstddef>
#include <functional>

namespace switchrate {

/// Thread cap: min(SWITCHRATE_THREADS, hardware concurrency), at least 1.
std::size_t thread_budget();

/// Runs fn(i) for i in [0, n). Work items must be independent; results should
/// be written to per-index slots so the outcome does not depend on the thread
/// count. Falls back to a serial loop when the budget is 1 or n is small.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace switchrate
