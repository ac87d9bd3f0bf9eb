#pragma once

#include <condition_variable>
#include <mutex>
#include <stop_token>

#include "jna/domain/time.hpp"

namespace jna::ingest {

class Clock {
 public:
  virtual ~Clock() = default;
  virtual domain::Timestamp now() const = 0;
  // Blocks until now() >= t or a stop is requested.
  virtual void sleep_until(domain::Timestamp t, std::stop_token stop) = 0;
};

class SystemClock final : public Clock {
 public:
  domain::Timestamp now() const override;
  void sleep_until(domain::Timestamp t, std::stop_token stop) override;

 private:
  std::mutex mutex_;
  std::condition_variable_any cv_;
};

// Virtual clock for offline runs and tests. sleep_until jumps straight to
// the target; stall() makes the next sleep overshoot, simulating a
// suspended process.
class ManualClock final : public Clock {
 public:
  explicit ManualClock(domain::Timestamp start) : now_(start) {}

  domain::Timestamp now() const override;
  void sleep_until(domain::Timestamp t, std::stop_token stop) override;

  void set(domain::Timestamp t);
  void advance(domain::Seconds d);
  void stall(domain::Seconds extra);

 private:
  mutable std::mutex mutex_;
  domain::Timestamp now_;
  domain::Seconds pending_stall_{0};
};

}  // namespace jna::ingest
