#pragma once

#include <cstddef>
#include <functional>

namespace siegel {

/// Worker count from SIEGEL_THREADS (positive integer), else 1.
std::size_t thread_count();

/// Calls body(i) for i in [0, n) on thread_count() threads. Rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace siegel
