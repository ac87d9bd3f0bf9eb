#pragma once

#include <cstddef>
#include <vector>

#include "jna/domain/post.hpp"
#include "jna/rank/daily_window.hpp"
#include "jna/store/kernels.hpp"
#include "jna/store/snapshot.hpp"

namespace jna::rank {

inline constexpr std::size_t kTopListSize = 10;
inline constexpr std::size_t kGridSize = 256;
inline constexpr domain::MetricKey kDailyMetric{domain::MetricBase::All, true};

struct RankedEntry {
  domain::Post post;
  domain::Ratio value;
};

struct RankedView {
  DailyWindow window;
  domain::MetricKey metric;
  std::size_t k = 0;
  std::vector<RankedEntry> entries;
};

// The k leading posts of the window under compare(.., SortKey::by(metric)).
// Throws std::invalid_argument for k == 0.
RankedView top_k(const store::Snapshot& snap, DailyWindow window, std::size_t k,
                 domain::MetricKey metric,
                 store::ExecPolicy policy = store::ExecPolicy::Parallel);

}  // namespace jna::rank
