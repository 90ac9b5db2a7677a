#pragma once

#include <functional>

namespace acopt {

// Data-parallel helpers for node loops. Work is split into fixed-size
// chunks so that reduction order (and therefore every last bit of the
// result) does not depend on the number of threads. Thread count is
// capped by the ACOPT_THREADS environment variable.

// Number of worker threads in use (>= 1).
int thread_count();

// Fields below this many nodes are processed serially; threading pays
// off only on paper-scale grids.
inline constexpr int kParallelThreshold = 32768;

// Chunk size shared by all loops and reductions. Must stay fixed:
// per-chunk partial sums are combined in chunk order.
inline constexpr int kChunk = 8192;

// Invokes fn(begin, end) over [0, n) in chunks of kChunk.
void parallel_chunks(int n, const std::function<void(int, int)>& fn);

// Chunked sum: fn(begin, end) returns the partial sum of a chunk.
// Partials are added in chunk order regardless of thread count.
double parallel_sum(int n, const std::function<double(int, int)>& fn);

}  // namespace acopt
