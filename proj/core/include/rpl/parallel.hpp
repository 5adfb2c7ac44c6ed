#pragma once

#include <functional>

namespace rpl {

/// Number of worker threads: hardware concurrency capped by the
/// ROUGH_PLAPLACE_THREADS environment variable when it is set.
int worker_count();

/// Run fn(0..count-1) on the worker pool. Blocks until all tasks finish;
/// the first exception thrown by any task is rethrown on the caller.
void parallel_for(int count, const std::function<void(int)>& fn);

} // namespace rpl
