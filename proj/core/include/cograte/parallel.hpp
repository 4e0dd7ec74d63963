#pragma once

#include <cstdint>
#include <functional>

namespace cograte::parallel {

/// Process-wide default worker count; 0 means hardware concurrency.
int default_threads();
void set_default_threads(int threads);

/// Runs fn(i) for i in [0, n) across `threads` workers (0 = default).
/// Scheduling order is unspecified; callers must write results into
/// index-addressed slots so output does not depend on the thread count.
/// The first exception thrown by any worker is rethrown on the caller.
void for_each_index(std::int64_t n, const std::function<void(std::int64_t)>& fn,
                    int threads = 0);

}  // namespace cograte::parallel
