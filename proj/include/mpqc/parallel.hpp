#pragma once

#include <cstddef>
#include <functional>

namespace mpqc {

/// Worker count: MPQC_WORKERS if set to a positive integer, else the hardware concurrency.
std::size_t worker_count();

/// Runs task(i) for every i in [0, count) on a pool of workers. Tasks must be
/// independent; callers reduce per-index results themselves so the outcome
/// does not depend on scheduling. The first exception thrown is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace mpqc
