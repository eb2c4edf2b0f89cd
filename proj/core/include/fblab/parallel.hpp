#pragma once

#include <cstddef>
#include <functional>

namespace fblab {

// Worker cap: FBLAB_THREADS if set, else hardware concurrency.
int worker_count();

// Runs fn(block_begin, block_end) over [begin, end) split into fixed-size
// blocks. Blocks are assigned to workers dynamically, but callers that
// accumulate per-block results into block-indexed slots stay deterministic
// regardless of thread count.
void parallel_for_blocks(std::size_t begin, std::size_t end, std::size_t block,
                         const std::function<void(std::size_t, std::size_t)>& fn);

// Deterministic max-reduction over [0, n): fn(i) evaluated in data-parallel
// blocks, partial maxima combined in block order.
double parallel_max(std::size_t n, const std::function<double(std::size_t)>& fn);

} // namespace fblab
