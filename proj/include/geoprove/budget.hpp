#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>

namespace geoprove {

/// Deadline plus a cap on the number of monomials alive in one working set.
/// Exceeding either raises TimeoutError; a budget never changes a verdict.
class Budget {
 public:
  using Clock = std::chrono::steady_clock;

  Budget() = default;
  Budget(std::chrono::duration<double> limit, std::size_t max_monomials = 4'000'000);

  static Budget unlimited() { return Budget{}; }

  /// Throws TimeoutError when out of time or `live_monomials` is over the cap.
  void check(std::size_t live_monomials = 0) const;

  std::size_t peak_monomials() const noexcept { return peak_.load(std::memory_order_relaxed); }
  double limit_seconds() const noexcept { return limit_seconds_; }

  Budget(const Budget& other);
  Budget& operator=(const Budget& other);

 private:
  bool limited_ = false;
  double limit_seconds_ = 0;
  Clock::time_point deadline_{};
  std::size_t max_monomials_ = static_cast<std::size_t>(-1);
  mutable std::atomic<std::size_t> peak_{0};
};

}  // namespace geoprove
