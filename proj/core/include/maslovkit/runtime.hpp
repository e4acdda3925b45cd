#pragma once

#include <cstdint>
#include <functional>

namespace maslovkit {

/// Worker cap for batch runs: MASLOVKIT_THREADS, else hardware concurrency.
int max_threads();

/// Runs fn(i) for i in [0, count) on up to max_threads() workers. Falls back
/// to a serial loop for small batches. fn must be safe to call concurrently.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace maslovkit
