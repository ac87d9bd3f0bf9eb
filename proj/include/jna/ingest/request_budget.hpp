#pragma once

#include "jna/domain/time.hpp"

namespace jna::ingest {

// Fixed-window request budget: at most `per_hour` requests within each
// wall-clock hour [hh:00:00, hh+1:00:00).
class RequestBudget {
 public:
  explicit RequestBudget(int per_hour);

  bool try_acquire(domain::Timestamp now);
  int remaining(domain::Timestamp now) const;
  int per_hour() const noexcept { return per_hour_; }

 private:
  int per_hour_;
  domain::Timestamp window_{};
  int used_ = 0;
};

}  // namespace jna::ingest
