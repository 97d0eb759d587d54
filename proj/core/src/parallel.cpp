#include "loctrig/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace loctrig {

namespace {

std::atomic<unsigned> g_max_threads{0};

// Below this many iterations per worker, spawning threads costs more than it saves.
constexpr std::size_t kMinChunk = 16;

}  // namespace

void set_max_threads(unsigned count) { g_max_threads.store(count); }

unsigned max_threads() {
  const unsigned requested = g_max_threads.load();
  if (requested != 0) {
    return requested;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t)>& body) {
  if (end <= begin) {
    return;
  }
  const std::size_t total = end - begin;
  const std::size_t workers =
      std::min<std::size_t>(max_threads(), std::max<std::size_t>(1, total / kMinChunk));
  if (workers <= 1) {
    for (std::size_t i = begin; i < end; ++i) {
      body(i);
    }
    return;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (total + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = begin + w * chunk;
    const std::size_t hi = std::min(end, lo + chunk);
    if (lo >= hi) {
      break;
    }
    pool.emplace_back([&, lo, hi] {
      try {
        for (std::size_t i = lo; i < hi; ++i) {
          body(i);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

}  // namespace loctrig
