#pragma once

#include <cstddef>
#include <functional>

namespace orbitx {

/// Worker count: ORBITX_THREADS if set (>=1), else hardware concurrency.
std::size_t worker_count();

/// Runs fn(begin, end) over a partition of [0, n). Chunks are contiguous,
/// outputs of different chunks must be disjoint. Serial when n is small.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace orbitx
