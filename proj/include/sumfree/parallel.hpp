#pragma once

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace sumfree {

/// Worker-thread cap shared by all parallel loops. Set once at startup
/// (CLI --threads / SUMFREE_THREADS); defaults to hardware concurrency.
int thread_cap();
void set_thread_cap(int cap);

/// Runs fn(i) for i in [begin, end). Iterations must write only to their
/// own output slots; results are then identical for any schedule.
void parallel_for(std::int64_t begin, std::int64_t end,
                  const std::function<void(std::int64_t)>& fn);

}  // namespace sumfree
