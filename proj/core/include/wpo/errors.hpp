#ifndef WPO_ERRORS_HPP
#define WPO_ERRORS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace wpo {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input; position is a 0-based character offset.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Precondition violation: dimension mismatch, value out of range, etc.
class domain_error : public error {
 public:
  using error::error;
};

/// A step budget ran out before the operation finished.
class budget_error : public error {
 public:
  explicit budget_error(const std::string& what) : error(what), limit_(0) {}
  explicit budget_error(std::uint64_t limit)
      : error("budget exhausted after " + std::to_string(limit) + " steps"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Deterministic step counter shared across an operation. Budgets count
/// abstract steps (node expansions, descent steps), never wall-clock.
class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  /// Consumes n steps, throwing budget_error once the limit is passed.
  void charge(std::uint64_t n = 1) {
    if (!try_charge(n)) throw budget_error(limit_);
  }

  /// Non-throwing variant; returns false (and marks exhaustion) on overrun.
  bool try_charge(std::uint64_t n = 1) {
    if (exhausted_ || used_ + n > limit_) {
      exhausted_ = true;
      return false;
    }
    used_ += n;
    return true;
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }
  bool exhausted() const noexcept { return exhausted_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  bool exhausted_ = false;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace wpo

#endif
