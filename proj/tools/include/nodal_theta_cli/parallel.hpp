#pragma once

#include <cstddef>
#include <functional>

namespace nodal_theta::cli {

/// Worker count: hardware concurrency capped by NODAL_THETA_THREADS.
unsigned thread_count();

/// Calls body(i) for i in [0, n) on up to thread_count() threads. The first
/// exception thrown by any call is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace nodal_theta::cli
