#include "jna/rank/daily_cache.hpp"

namespace jna::rank {

DailyViewCache::DailyViewCache(const store::PostStore& store, DailySchedule schedule,
                               std::size_t k, domain::MetricKey metric)
    : store_(store), schedule_(std::move(schedule)), k_(k), metric_(metric) {}

std::shared_ptr<const RankedView> DailyViewCache::get(domain::Timestamp now) {
  const auto window = current_daily_window(now, schedule_);
  {
    std::lock_guard lock(state_mutex_);
    if (cached_ && cached_->window == window) return cached_;
    if (computing_ && cached_) return cached_;
  }

  std::lock_guard flight(compute_mutex_);
  {
    std::lock_guard lock(state_mutex_);
    if (cached_ && cached_->window == window) return cached_;
    computing_ = true;
  }

  std::shared_ptr<const RankedView> fresh;
  try {
    fresh = std::make_shared<const RankedView>(top_k(*store_.snapshot(), window, k_, metric_));
  } catch (...) {
    std::lock_guard lock(state_mutex_);
    computing_ = false;
    throw;
  }
  ++computations_;

  std::lock_guard lock(state_mutex_);
  computing_ = false;
  cached_ = fresh;
  return fresh;
}

}  // namespace jna::rank
