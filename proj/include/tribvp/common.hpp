#pragma once

#include <complex>
#include <cstdlib>
#include <mutex>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace tribvp {

using Complex = std::complex<double>;

constexpr double kDefaultRMax = 0.8;

// Error taxonomy shared across modules.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingField : Error {
  explicit MissingField(const std::string& kind, const std::string& field)
      : Error("missing field '" + field + "' for kind '" + kind + "'") {}
};
struct ExtraField : Error {
  explicit ExtraField(const std::string& kind, const std::string& field)
      : Error("field '" + field + "' not allowed for kind '" + kind + "'") {}
};
struct SyntaxError : Error {
  SyntaxError(const std::string& what, std::size_t pos)
      : Error(what + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};
struct UnknownIdentifier : Error {
  explicit UnknownIdentifier(const std::string& name)
      : Error("unknown identifier '" + name + "'") {}
};
struct DomainError : Error {
  using Error::Error;
};
struct UnsupportedNode : Error {
  using Error::Error;
};
struct NearBoundary : Error {
  explicit NearBoundary(double r, double r_max)
      : Error("|z| = " + std::to_string(r) + " exceeds safe radius " +
              std::to_string(r_max)) {}
};
struct StepTooLarge : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};

inline int max_threads() {
  if (const char* env = std::getenv("TRIBVP_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Parallel loop over [0, n). Each index does independent work; results must be
// written to disjoint slots so the outcome is identical for any thread count.
// The first worker exception is rethrown on the calling thread.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  int nt = max_threads();
  if (nt <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::size_t chunk = (n + nt - 1) / nt;
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (int t = 0; t < nt; ++t) {
    std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &body, &first_error, &error_mutex] {
      try {
        for (std::size_t i = lo; i < hi; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace tribvp
