#include "jna/ingest/clock.hpp"

#include <algorithm>

namespace jna::ingest {

domain::Timestamp SystemClock::now() const {
  return std::chrono::floor<domain::Seconds>(std::chrono::system_clock::now());
}

void SystemClock::sleep_until(domain::Timestamp t, std::stop_token stop) {
  std::unique_lock lock(mutex_);
  cv_.wait_until(lock, stop, t, [] { return false; });
}

domain::Timestamp ManualClock::now() const {
  std::lock_guard lock(mutex_);
  return now_;
}

void ManualClock::sleep_until(domain::Timestamp t, std::stop_token stop) {
  if (stop.stop_requested()) return;
  std::lock_guard lock(mutex_);
  now_ = std::max(now_, t) + pending_stall_;
  pending_stall_ = domain::Seconds{0};
}

void ManualClock::set(domain::Timestamp t) {
  std::lock_guard lock(mutex_);
  now_ = t;
}

void ManualClock::advance(domain::Seconds d) {
  std::lock_guard lock(mutex_);
  now_ += d;
}

void ManualClock::stall(domain::Seconds extra) {
  std::lock_guard lock(mutex_);
  pending_stall_ += extra;
}

}  // namespace jna::ingest
