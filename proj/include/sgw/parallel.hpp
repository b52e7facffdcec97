#ifndef SGW_PARALLEL_HPP
#define SGW_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace sgw {

/// Runs fn(i) for i in [0, count). With workers <= 1 the calls happen inline,
/// in order. Otherwise worker threads pull indices from a shared counter; fn
/// must write its result into a slot owned by index i so the output does not
/// depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (workers > count) workers = static_cast<unsigned>(count);
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        fn(i);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

}  // namespace sgw

#endif
