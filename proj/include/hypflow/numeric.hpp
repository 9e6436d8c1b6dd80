#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <thread>
#include <vector>

#include "hypflow/errors.hpp"

namespace hypflow {

inline constexpr double kPi = std::numbers::pi;

inline bool is_finite(cdouble z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Nearly-integer test used for pole detection and index validation.
inline bool near_integer(double x, double tol = 1e-12) {
  return std::abs(x - std::round(x)) <= tol;
}

// Compensated (Kahan) accumulation for long alternating sums.
struct KahanSum {
  cdouble sum{0.0};
  cdouble carry{0.0};
  void add(cdouble term) {
    cdouble y = term - carry;
    cdouble t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

inline int hardware_thread_cap() {
  if (const char* env = std::getenv("HYPFLOW_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Index-parallel loop. Results must be written to disjoint slots so the
// assembled output is independent of scheduling.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  std::size_t threads = static_cast<std::size_t>(hardware_thread_cap());
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  threads = std::min(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < n; i += threads) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace hypflow
