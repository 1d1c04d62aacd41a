#pragma once

#include <cstddef>
#include <functional>

namespace tndg {

/// Thread budget: TNDG_THREADS if set (>= 1), otherwise hardware concurrency.
int thread_budget();

/// Run fn(i) for i in [0, n). Work items must be independent; results should
/// be written to per-index slots so output does not depend on scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace tndg
