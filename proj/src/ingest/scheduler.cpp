#include "jna/ingest/scheduler.hpp"

#include <spdlog/spdlog.h>

#include <stdexcept>

namespace jna::ingest {

Scheduler::Scheduler(Clock& clock, domain::Seconds interval, PollFn poll)
    : clock_(clock), interval_(interval), poll_(std::move(poll)) {
  if (interval_.count() < 1) throw std::invalid_argument("poll interval must be positive");
}

void Scheduler::run(std::stop_token stop, std::optional<domain::Timestamp> horizon) {
  auto now = clock_.now();
  auto next = domain::floor_to(now, interval_);
  if (next < now) next += interval_;

  while (!stop.stop_requested()) {
    if (horizon && next > *horizon) return;
    clock_.sleep_until(next, stop);
    if (stop.stop_requested()) return;
    now = clock_.now();
    if (now < next) continue;

    ++polls_;
    try {
      poll_(now);
    } catch (const std::exception& e) {
      ++failures_;
      spdlog::error("poll at {} failed: {}", domain::format_iso8601(now), e.what());
    }
    next = domain::floor_to(now, interval_) + interval_;
  }
}

void run_scheduler(Poller& poller, std::vector<std::string> pages, Clock& clock,
                   domain::Seconds interval, std::stop_token stop) {
  Scheduler scheduler(clock, interval, [&](domain::Timestamp now) { poller.poll_once(pages, now); });
  scheduler.run(stop);
}

}  // namespace jna::ingest
