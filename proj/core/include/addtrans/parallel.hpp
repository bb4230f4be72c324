#pragma once

#include <cstdint>
#include <functional>

namespace addtrans {

/// Worker count used by batch paths. Defaults to the hardware concurrency;
/// the ADDTRANS_THREADS environment variable caps it. Always >= 1.
int worker_count();

/// Splits [begin, end) into contiguous chunks, one worker per chunk, and
/// runs fn(chunk_begin, chunk_end) on each. Results must be written to
/// disjoint, preallocated slots so the outcome is identical for any worker
/// count. Runs inline when a single worker suffices.
void parallel_chunks(
    std::uint64_t begin, std::uint64_t end,
    const std::function<void(std::uint64_t, std::uint64_t)>& fn);

}  // namespace addtrans
