#pragma once

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace tvb {

/// Worker cap: TVBKIT_THREADS if set and positive, else the hardware concurrency.
inline std::size_t thread_cap() {
  if (const char* env = std::getenv("TVBKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// out[i] = fn(i), evaluated in waves of at most thread_cap() tasks. Order of results is fixed.
template <class Fn>
auto parallel_map(std::size_t count, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using R = decltype(fn(std::size_t{}));
  std::vector<R> out;
  out.reserve(count);
  const std::size_t width = std::max<std::size_t>(1, thread_cap());
  if (width == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
    return out;
  }
  for (std::size_t start = 0; start < count; start += width) {
    std::vector<std::future<R>> wave;
    const std::size_t stop = std::min(count, start + width);
    for (std::size_t i = start; i < stop; ++i) wave.push_back(std::async(std::launch::async, fn, i));
    for (auto& f : wave) out.push_back(f.get());
  }
  return out;
}

}  // namespace tvb
