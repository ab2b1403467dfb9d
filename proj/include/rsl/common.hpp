#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace rsl {

// Thrown when an operation's stated precondition is violated.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when an enumeration or search exceeds its configured budget.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when the constrained walk leaves its boxes before bracketing the
// target (the scale was too small for the given shape parameters).
class walk_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Floor of sqrt(n) for n >= 0, exact.
inline std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw precondition_error("isqrt64: negative argument");
  if (n == 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

// Thread cap: RSL_THREADS if set to a positive integer, else hardware count.
inline unsigned thread_cap() {
  if (const char* env = std::getenv("RSL_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs body(i) for i in [0, count) across at most thread_cap() threads.
// Bodies must write to disjoint state; chunk order is deterministic.
inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  unsigned threads = thread_cap();
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  if (threads > count) threads = static_cast<unsigned>(count);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < count; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace rsl
