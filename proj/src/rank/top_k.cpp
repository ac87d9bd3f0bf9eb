#include "jna/rank/top_k.hpp"

#include <stdexcept>

namespace jna::rank {

RankedView top_k(const store::Snapshot& snap, DailyWindow window, std::size_t k,
                 domain::MetricKey metric, store::ExecPolicy policy) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  RankedView view{window, metric, k, {}};

  const auto in_window = snap.range(window.start(), window.cutoff);
  store::ScanFilter filter{window.start(), window.cutoff, {}, {}};
  auto idx = store::match(in_window, filter, policy);
  store::order_prefix(in_window, idx, SortKey::by(metric), Direction::Descending, k, policy);

  view.entries.reserve(idx.size());
  for (const auto i : idx) {
    const auto& sp = in_window[i];
    view.entries.push_back(RankedEntry{sp.post, metric_of(sp.fields, metric)});
  }
  return view;
}

}  // namespace jna::rank
