#pragma once

#include <cstddef>
#include <functional>

namespace hardy::numerics {

/// Worker count: hardware concurrency, capped by the HARDY_THREADS
/// environment variable when set to a positive integer.
std::size_t thread_count();

/// Runs body(i) for i in [0, count). Work is split into contiguous blocks;
/// callers write results by index, so reductions stay deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace hardy::numerics
