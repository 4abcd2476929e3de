#pragma once

#include <cstdint>
#include <functional>

namespace herd {

// Worker count for data-parallel sections: HERD_THREADS if set (clamped to
// [1, 256]), otherwise the hardware concurrency.
int worker_count();

// Runs body(i) for i in [0, n). Iterations must write only to their own
// output slots; any reduction over the results stays with the caller so that
// summation order is independent of the worker count.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& body);

}  // namespace herd
