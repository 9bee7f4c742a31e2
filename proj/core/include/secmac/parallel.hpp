#ifndef SECMAC_PARALLEL_HPP
#define SECMAC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace secmac {

/// Worker cap from SECMAC_THREADS (0 or unset = hardware concurrency).
int worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads with a static
/// partition. Caller output must be slot-per-index so results are
/// schedule-independent.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace secmac

#endif
