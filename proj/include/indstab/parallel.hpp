#pragma once

// Static-chunk parallel loop over an index range. Results land in caller-owned
// slots addressed by index, so output never depends on scheduling.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace indstab {

// requested > 0 wins, then INDSTAB_WORKERS, then the hardware count.
inline auto resolve_workers(int requested) -> int
{
  if (requested > 0)
    return requested;
  if (const char* env = std::getenv("INDSTAB_WORKERS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0)
        return v;
    } catch (const std::exception&) {
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

// Calls fn(i) for every i in [0, count). Work is handed out in chunks from a
// shared counter. The first exception thrown by any call is rethrown.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn, std::size_t chunk = 64)
{
  workers = std::max(1, std::min<int>(workers, static_cast<int>((count + chunk - 1) / std::max<std::size_t>(chunk, 1))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{ 0 };
  std::atomic<bool> failed{ false };
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t start = next.fetch_add(chunk);
      if (start >= count || failed.load())
        return;
      const std::size_t stop = std::min(count, start + chunk);
      try {
        for (std::size_t i = start; i < stop; ++i)
          fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error)
          error = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back(body);
  for (auto& t : pool)
    t.join();
  if (error)
    std::rethrow_exception(error);
}

} // namespace indstab
