#pragma once

#include <cstddef>
#include <functional>

namespace darkgallery {

// DARKGALLERY_THREADS caps the worker count; default is the hardware count.
unsigned thread_count();

// Calls body(worker, worker_count) on each worker; worker 0 runs inline.
// Work split inside body must depend only on (worker, worker_count) so results merge deterministically.
void run_workers(unsigned workers, const std::function<void(unsigned, unsigned)>& body);

}  // namespace darkgallery
