#include "jna/ingest/request_budget.hpp"

#include <stdexcept>

namespace jna::ingest {

RequestBudget::RequestBudget(int per_hour) : per_hour_(per_hour) {
  if (per_hour < 1) throw std::invalid_argument("request budget must be positive");
}

bool RequestBudget::try_acquire(domain::Timestamp now) {
  const auto window = domain::floor_to(now, domain::kHour);
  if (window != window_) {
    window_ = window;
    used_ = 0;
  }
  if (used_ >= per_hour_) return false;
  ++used_;
  return true;
}

int RequestBudget::remaining(domain::Timestamp now) const {
  return domain::floor_to(now, domain::kHour) != window_ ? per_hour_ : per_hour_ - used_;
}

}  // namespace jna::ingest
