#include "lpwidim/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace lpwidim {

void parallel_chunks(std::size_t count, unsigned workers,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& body) {
  const unsigned w = std::max(1u, workers);
  if (w == 1 || count <= 1) {
    body(0, 0, count);
    return;
  }
  const std::size_t chunk = (count + w - 1) / w;
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (unsigned t = 0; t < w; ++t) {
    const std::size_t begin = std::min(count, t * chunk);
    const std::size_t end = std::min(count, begin + chunk);
    if (begin == end) continue;
    threads.emplace_back([&, t, begin, end] {
      try {
        body(t, begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : threads) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace lpwidim
