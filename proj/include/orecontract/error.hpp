#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>

namespace oc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A documented precondition was violated (zero divisor, order mismatch, ...).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Input text could not be parsed. `position` is a 0-based byte offset.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

/// Step budget exhausted or computation cancelled.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// Input has a shape the requested pipeline does not handle.
class UnsupportedShape : public Error {
  public:
    using Error::Error;
};

/// Cooperative step budget shared by the long-running loops.
///
/// Every reduction step calls `tick()`. The budget throws ResourceError once
/// the limit is exceeded or `cancel()` has been requested from another thread.
class StepBudget {
  public:
    static constexpr std::uint64_t kDefaultLimit = 10'000'000;

    explicit StepBudget(std::uint64_t limit = kDefaultLimit)
        : limit_(limit), cancelled_(std::make_shared<std::atomic<bool>>(false)) {}

    void tick(std::uint64_t n = 1) {
        used_ += n;
        if (used_ > limit_)
            throw ResourceError("step budget of " + std::to_string(limit_) + " reduction steps exhausted");
        if (cancelled_->load(std::memory_order_relaxed))
            throw ResourceError("computation cancelled");
    }
    void cancel() { cancelled_->store(true); }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

  private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
    std::shared_ptr<std::atomic<bool>> cancelled_;
};

/// Budget used when the caller does not supply one.
inline StepBudget &unlimited_budget() {
    thread_local StepBudget b(UINT64_MAX);
    return b;
}

} // namespace oc
