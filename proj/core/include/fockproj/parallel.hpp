#pragma once

#include <cstddef>
#include <functional>

namespace fockproj {

/// Worker count from FOCKPROJ_THREADS (0 or unset = hardware concurrency).
unsigned default_thread_count();

/// Calls body(i) for i in [0, count) across up to `threads` workers in
/// contiguous chunks. `threads == 0` means default_thread_count(). Bodies must
/// write only to disjoint outputs.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body, unsigned threads = 0);

}  // namespace fockproj
