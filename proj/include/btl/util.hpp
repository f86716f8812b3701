#pragma once

#include <cstdint>
#include <functional>

namespace btl {

inline constexpr const char* kVersion = "0.1.0";

// Worker count for exhaustive scans: hardware concurrency, capped by the
// BTL_THREADS environment variable.
int worker_threads();

// Runs fn(begin, end) over disjoint chunks of [0, total) on worker threads
// and blocks until all finish.  fn must be safe to run concurrently on
// disjoint ranges.
void parallel_chunks(int64_t total, const std::function<void(int64_t, int64_t)>& fn);

}  // namespace btl
