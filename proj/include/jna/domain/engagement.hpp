#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace jna::domain {

__extension__ using uint128 = unsigned __int128;

// The eight public reaction counters a publisher post exposes.
enum class Reaction : std::uint8_t { Like, Comment, Share, Love, Haha, Wow, Sad, Angry };

inline constexpr std::array<Reaction, 8> kReactions{
    Reaction::Like, Reaction::Comment, Reaction::Share, Reaction::Love,
    Reaction::Haha, Reaction::Wow,     Reaction::Sad,   Reaction::Angry};

struct EngagementCounts {
  std::uint64_t like = 0;
  std::uint64_t comment = 0;
  std::uint64_t share = 0;
  std::uint64_t love = 0;
  std::uint64_t haha = 0;
  std::uint64_t wow = 0;
  std::uint64_t sad = 0;
  std::uint64_t angry = 0;

  std::uint64_t get(Reaction r) const noexcept;
  std::uint64_t& at(Reaction r) noexcept;

  friend bool operator==(const EngagementCounts&, const EngagementCounts&) = default;
};

std::uint64_t total_engagement(const EngagementCounts& e) noexcept;

// A sort/metric base: one of the reactions or the sum of all of them.
enum class MetricBase : std::uint8_t { Like, Comment, Share, Love, Haha, Wow, Sad, Angry, All };

inline constexpr std::array<MetricBase, 9> kMetricBases{
    MetricBase::Like, MetricBase::Comment, MetricBase::Share,
    MetricBase::Love, MetricBase::Haha,    MetricBase::Wow,
    MetricBase::Sad,  MetricBase::Angry,   MetricBase::All};

std::uint64_t count_for(const EngagementCounts& e, MetricBase base) noexcept;

// Lowercase wire token: like, comment, ..., angry, all.
std::string_view base_token(MetricBase base) noexcept;
std::optional<MetricBase> parse_base(std::string_view token) noexcept;

struct MetricKey {
  MetricBase base = MetricBase::All;
  bool age_adjusted = false;

  friend bool operator==(const MetricKey&, const MetricKey&) = default;
};

// All 18 keys, raw before adjusted for each base.
std::array<MetricKey, 18> all_metric_keys() noexcept;

// Wire token such as "all_adj" or "like_raw".
std::string metric_token(MetricKey key);
std::optional<MetricKey> parse_metric_token(std::string_view token) noexcept;

// Exact non-negative rational. Comparison is exact (128-bit cross products).
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) noexcept {
    const auto lhs = static_cast<uint128>(a.num) * b.den;
    const auto rhs = static_cast<uint128>(b.num) * a.den;
    return lhs <=> rhs;
  }
  friend bool operator==(const Ratio& a, const Ratio& b) noexcept {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

// Fixed-point decimal rendering rounded half-up to `significant` significant
// digits, never in exponent notation. Zero renders as "0".
std::string to_decimal_string(Ratio value, int significant = 9);

}  // namespace jna::domain
