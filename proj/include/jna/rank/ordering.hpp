#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "jna/domain/post.hpp"

namespace jna::rank {

enum class SortKind : std::uint8_t { Newest, Oldest, Metric };

// One of the 20 orderings the Explorer offers: newest, oldest, or any of
// the 18 metric keys.
struct SortKey {
  SortKind kind = SortKind::Newest;
  domain::MetricKey metric{};

  static SortKey newest() { return {SortKind::Newest, {}}; }
  static SortKey oldest() { return {SortKind::Oldest, {}}; }
  static SortKey by(domain::MetricKey m) { return {SortKind::Metric, m}; }

  friend bool operator==(const SortKey& a, const SortKey& b) {
    return a.kind == b.kind && (a.kind != SortKind::Metric || a.metric == b.metric);
  }
};

// Descending is each key's natural order: highest metric first, newest
// first for Newest, oldest first for Oldest. Ascending reverses only the
// primary comparison; tie-breaks never change.
enum class Direction : std::uint8_t { Descending, Ascending };

std::array<SortKey, 20> all_sort_keys();

// newest | oldest | {like|comment|share|love|haha|wow|sad|angry|all}_{raw|adj}
std::string sort_token(SortKey key);
std::optional<SortKey> parse_sort_token(std::string_view token);

// Per-post values the comparator needs, precomputed once per stored post.
struct SortFields {
  domain::Timestamp posted_at{};
  std::array<std::uint64_t, 9> counts{};  // indexed by MetricBase
  std::uint64_t age = 1;                  // clamped age in seconds
};

SortFields sort_fields(const domain::Post& p);

domain::Ratio metric_of(const SortFields& f, domain::MetricKey key) noexcept;

// Total order: `less` means `a` is listed before `b`. Primary by key, then
// posted_at descending, then post_id ascending.
std::strong_ordering compare_fields(const SortFields& a, std::string_view id_a,
                                    const SortFields& b, std::string_view id_b, SortKey key,
                                    Direction dir = Direction::Descending) noexcept;

std::strong_ordering compare(const domain::Post& a, const domain::Post& b, SortKey key,
                             Direction dir = Direction::Descending);

}  // namespace jna::rank
