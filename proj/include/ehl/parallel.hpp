#pragma once

#include <functional>

namespace ehl {

// Worker cap: EHL_THREADS when set, hardware concurrency otherwise.
int max_threads();

// Index-parallel map; results land by index so output order is deterministic.
void parallel_for(int n, const std::function<void(int)>& fn);

}  // namespace ehl
