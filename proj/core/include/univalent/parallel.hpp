#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace univalent {

inline std::size_t worker_count() {
  const auto hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<std::size_t>(hw);
}

/// Splits [0, count) into contiguous chunks and calls fn(chunk, begin, end) for each,
/// one thread per chunk. Chunk boundaries depend only on `count` and `chunks`, so
/// callers that reduce per-chunk results in chunk order are deterministic.
template <typename Fn>
void parallel_chunks(std::size_t count, std::size_t chunks, Fn&& fn) {
  chunks = std::max<std::size_t>(1, std::min(chunks, count));
  if (chunks == 1) {
    fn(std::size_t{0}, std::size_t{0}, count);
    return;
  }
  std::vector<std::jthread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    threads.emplace_back([&fn, c, begin, end] { fn(c, begin, end); });
  }
}

}  // namespace univalent
