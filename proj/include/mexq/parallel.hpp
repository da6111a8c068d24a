#pragma once

#include <cstdint>
#include <functional>

namespace mexq {

// Worker count used by the parallel kernels (convolution, Hecke action).
// Results never depend on this value. Defaults to 1.
void set_thread_count(unsigned n) noexcept;
unsigned thread_count() noexcept;

// Splits [0, n) into contiguous chunks, one per worker, and runs
// body(lo, hi) on each. Blocks until all chunks finish; rethrows the first
// exception in chunk order.
void parallel_chunks(std::int64_t n, const std::function<void(std::int64_t, std::int64_t)>& body);

} // namespace mexq
