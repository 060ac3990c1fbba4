#pragma once

#include <cstddef>
#include <functional>

namespace whk {

/// Worker cap from WHK_THREADS (default 1), bounded by the hardware.
std::size_t thread_budget();

/// Runs fn over disjoint chunks [begin, end) covering [0, n), in parallel
/// when the budget allows. Callers must make chunk results independent and
/// merge them order-insensitively (reports sort their witnesses).
void parallel_chunks(std::size_t n,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& fn);

/// Number of chunks parallel_chunks will use for n items.
std::size_t chunk_count(std::size_t n);

}  // namespace whk
