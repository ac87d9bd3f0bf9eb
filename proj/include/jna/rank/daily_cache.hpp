#pragma once

#include <atomic>
#include <memory>
#include <mutex>

#include "jna/rank/top_k.hpp"
#include "jna/store/post_store.hpp"

namespace jna::rank {

// Daily ranked view computed on first request after each cutoff and reused
// until the next one. Recomputation is single-flight: while one caller
// recomputes, concurrent callers receive the previous view if there is one.
class DailyViewCache {
 public:
  DailyViewCache(const store::PostStore& store, DailySchedule schedule, std::size_t k,
                 domain::MetricKey metric = kDailyMetric);

  std::shared_ptr<const RankedView> get(domain::Timestamp now);

  std::size_t computations() const noexcept { return computations_.load(); }

 private:
  const store::PostStore& store_;
  DailySchedule schedule_;
  std::size_t k_;
  domain::MetricKey metric_;

  std::mutex state_mutex_;
  std::mutex compute_mutex_;
  std::shared_ptr<const RankedView> cached_;
  bool computing_ = false;
  std::atomic<std::size_t> computations_{0};
};

}  // namespace jna::rank
