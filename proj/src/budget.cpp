#include "geoprove/budget.hpp"

#include <string>

#include "geoprove/errors.hpp"

namespace geoprove {

Budget::Budget(std::chrono::duration<double> limit, std::size_t max_monomials)
    : limited_(true),
      limit_seconds_(limit.count()),
      deadline_(Clock::now() + std::chrono::duration_cast<Clock::duration>(limit)),
      max_monomials_(max_monomials) {}

Budget::Budget(const Budget& other)
    : limited_(other.limited_),
      limit_seconds_(other.limit_seconds_),
      deadline_(other.deadline_),
      max_monomials_(other.max_monomials_),
      peak_(other.peak_monomials()) {}

Budget& Budget::operator=(const Budget& other) {
  limited_ = other.limited_;
  limit_seconds_ = other.limit_seconds_;
  deadline_ = other.deadline_;
  max_monomials_ = other.max_monomials_;
  peak_.store(other.peak_monomials(), std::memory_order_relaxed);
  return *this;
}

void Budget::check(std::size_t live_monomials) const {
  std::size_t prev = peak_.load(std::memory_order_relaxed);
  while (live_monomials > prev && !peak_.compare_exchange_weak(prev, live_monomials, std::memory_order_relaxed)) {
  }
  if (live_monomials > max_monomials_) {
    throw TimeoutError("monomial cap exceeded (" + std::to_string(live_monomials) + " live)");
  }
  if (limited_ && Clock::now() > deadline_) {
    throw TimeoutError("time limit of " + std::to_string(limit_seconds_) + " s exceeded");
  }
}

}  // namespace geoprove
