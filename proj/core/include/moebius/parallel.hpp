#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace moebius {

/// Splits [0, count) into contiguous chunks and runs fn(begin, end) for each
/// chunk on up to `jobs` threads. Returns the per-chunk results in chunk
/// order. The first exception thrown by any chunk is rethrown.
///
/// Callers that need output independent of `jobs` must merge the chunk
/// results in an order-insensitive way (sorting, minimum, sum).
template <typename Result, typename Fn>
std::vector<Result> parallel_chunks(std::size_t count, unsigned jobs, Fn&& fn) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs == 0 ? 1 : jobs, count));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = fn(std::size_t{0}, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        try {
          results[w] = fn(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
  return results;
}

}  // namespace moebius
