#include "jna/rank/ordering.hpp"

namespace jna::rank {

using domain::MetricBase;
using domain::MetricKey;
using domain::Ratio;

std::array<SortKey, 20> all_sort_keys() {
  std::array<SortKey, 20> keys{};
  keys[0] = SortKey::newest();
  keys[1] = SortKey::oldest();
  const auto metrics = domain::all_metric_keys();
  for (std::size_t i = 0; i < metrics.size(); ++i) keys[i + 2] = SortKey::by(metrics[i]);
  return keys;
}

std::string sort_token(SortKey key) {
  switch (key.kind) {
    case SortKind::Newest: return "newest";
    case SortKind::Oldest: return "oldest";
    case SortKind::Metric: break;
  }
  return domain::metric_token(key.metric);
}

std::optional<SortKey> parse_sort_token(std::string_view token) {
  if (token == "newest") return SortKey::newest();
  if (token == "oldest") return SortKey::oldest();
  if (const auto m = domain::parse_metric_token(token)) return SortKey::by(*m);
  return std::nullopt;
}

SortFields sort_fields(const domain::Post& p) {
  SortFields f;
  f.posted_at = p.posted_at;
  for (const auto base : domain::kMetricBases)
    f.counts[static_cast<std::size_t>(base)] = domain::count_for(p.engagement, base);
  f.age = static_cast<std::uint64_t>(domain::post_age_seconds(p));
  return f;
}

Ratio metric_of(const SortFields& f, MetricKey key) noexcept {
  const auto count = f.counts[static_cast<std::size_t>(key.base)];
  return key.age_adjusted ? Ratio{count, f.age} : Ratio{count, 1};
}

std::strong_ordering compare_fields(const SortFields& a, std::string_view id_a,
                                    const SortFields& b, std::string_view id_b, SortKey key,
                                    Direction dir) noexcept {
  // Natural order expressed as "a before b" => less.
  std::strong_ordering primary = std::strong_ordering::equal;
  switch (key.kind) {
    case SortKind::Newest: primary = b.posted_at <=> a.posted_at; break;
    case SortKind::Oldest: primary = a.posted_at <=> b.posted_at; break;
    case SortKind::Metric: primary = metric_of(b, key.metric) <=> metric_of(a, key.metric); break;
  }
  if (primary != 0) return dir == Direction::Descending ? primary : 0 <=> primary;
  if (const auto c = b.posted_at <=> a.posted_at; c != 0) return c;
  return id_a.compare(id_b) <=> 0;
}

std::strong_ordering compare(const domain::Post& a, const domain::Post& b, SortKey key,
                             Direction dir) {
  return compare_fields(sort_fields(a), a.post_id, sort_fields(b), b.post_id, key, dir);
}

}  // namespace jna::rank
