#ifndef LDFOE_PARALLEL_HPP_
#define LDFOE_PARALLEL_HPP_

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ldfoe {

// Runs body(begin, end) over contiguous chunks of [0, n). Each index is
// handled by exactly one worker, so writes keyed by index are race-free and
// results do not depend on the worker count. The first exception thrown by
// any chunk (lowest chunk index) is rethrown on the calling thread.
template <typename Body>
void parallel_for(int n, int workers, Body&& body) {
  workers = std::clamp(workers, 1, std::max(n, 1));
  if (workers == 1) {
    body(0, n);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      const int begin = static_cast<int>(static_cast<long long>(n) * w / workers);
      const int end = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
      threads.emplace_back([&body, &errors, w, begin, end] {
        try {
          body(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace ldfoe

#endif  // LDFOE_PARALLEL_HPP_
