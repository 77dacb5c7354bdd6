#pragma once

#include <cstddef>
#include <functional>

namespace qcong {

// worker count: `requested` if nonzero, else QCONG_THREADS, else hardware
unsigned effective_thread_count(unsigned requested = 0);

// runs body(0..count-1) across workers; rethrows the first worker exception
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace qcong
