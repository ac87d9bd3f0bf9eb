#pragma once

#include <functional>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include "jna/ingest/clock.hpp"
#include "jna/ingest/poller.hpp"

namespace jna::ingest {

// Fires a poll at every multiple of `interval` since the epoch (hh:00:00
// for the default hour). If the process wakes up late, past one or more
// boundaries, it polls once and then resumes at the next boundary after
// the catch-up; missed boundaries are not replayed. A poll that throws is
// logged and does not stop the loop.
class Scheduler {
 public:
  using PollFn = std::function<void(domain::Timestamp)>;

  Scheduler(Clock& clock, domain::Seconds interval, PollFn poll);

  // Runs until `stop` is requested, or, when `horizon` is given, until the
  // next boundary lies beyond it.
  void run(std::stop_token stop, std::optional<domain::Timestamp> horizon = std::nullopt);

  std::size_t polls() const noexcept { return polls_; }
  std::size_t failures() const noexcept { return failures_; }

 private:
  Clock& clock_;
  domain::Seconds interval_;
  PollFn poll_;
  std::size_t polls_ = 0;
  std::size_t failures_ = 0;
};

// Service loop: poll `pages` through `poller` on every boundary until stopped.
void run_scheduler(Poller& poller, std::vector<std::string> pages, Clock& clock,
                   domain::Seconds interval, std::stop_token stop);

}  // namespace jna::ingest
