#include "jna/domain/engagement.hpp"

#include <algorithm>

namespace jna::domain {

std::uint64_t EngagementCounts::get(Reaction r) const noexcept {
  switch (r) {
    case Reaction::Like: return like;
    case Reaction::Comment: return comment;
    case Reaction::Share: return share;
    case Reaction::Love: return love;
    case Reaction::Haha: return haha;
    case Reaction::Wow: return wow;
    case Reaction::Sad: return sad;
    case Reaction::Angry: return angry;
  }
  return 0;
}

std::uint64_t& EngagementCounts::at(Reaction r) noexcept {
  switch (r) {
    case Reaction::Like: return like;
    case Reaction::Comment: return comment;
    case Reaction::Share: return share;
    case Reaction::Love: return love;
    case Reaction::Haha: return haha;
    case Reaction::Wow: return wow;
    case Reaction::Sad: return sad;
    case Reaction::Angry: break;
  }
  return angry;
}

std::uint64_t total_engagement(const EngagementCounts& e) noexcept {
  return e.like + e.comment + e.share + e.love + e.haha + e.wow + e.sad + e.angry;
}

std::uint64_t count_for(const EngagementCounts& e, MetricBase base) noexcept {
  if (base == MetricBase::All) return total_engagement(e);
  return e.get(static_cast<Reaction>(base));
}

namespace {
constexpr std::array<std::string_view, 9> kBaseTokens{
    "like", "comment", "share", "love", "haha", "wow", "sad", "angry", "all"};
}

std::string_view base_token(MetricBase base) noexcept {
  return kBaseTokens[static_cast<std::size_t>(base)];
}

std::optional<MetricBase> parse_base(std::string_view token) noexcept {
  const auto it = std::find(kBaseTokens.begin(), kBaseTokens.end(), token);
  if (it == kBaseTokens.end()) return std::nullopt;
  return static_cast<MetricBase>(it - kBaseTokens.begin());
}

std::array<MetricKey, 18> all_metric_keys() noexcept {
  std::array<MetricKey, 18> keys{};
  std::size_t i = 0;
  for (const auto base : kMetricBases) {
    keys[i++] = MetricKey{base, false};
    keys[i++] = MetricKey{base, true};
  }
  return keys;
}

std::string metric_token(MetricKey key) {
  std::string out{base_token(key.base)};
  out += key.age_adjusted ? "_adj" : "_raw";
  return out;
}

std::optional<MetricKey> parse_metric_token(std::string_view token) noexcept {
  const auto sep = token.rfind('_');
  if (sep == std::string_view::npos) return std::nullopt;
  const auto base = parse_base(token.substr(0, sep));
  if (!base) return std::nullopt;
  const auto suffix = token.substr(sep + 1);
  if (suffix == "raw") return MetricKey{*base, false};
  if (suffix == "adj") return MetricKey{*base, true};
  return std::nullopt;
}

std::string to_decimal_string(Ratio value, int significant) {
  if (value.den == 0) return "nan";
  if (value.num == 0) return "0";

  std::string digits = std::to_string(value.num / value.den);
  std::size_t point = digits.size();
  int sig = digits == "0" ? 0 : static_cast<int>(digits.size());
  uint128 rem = value.num % value.den;

  while (sig < significant && rem != 0) {
    rem *= 10;
    const auto d = static_cast<unsigned>(rem / value.den);
    rem %= value.den;
    digits.push_back(static_cast<char>('0' + d));
    if (sig > 0 || d != 0) ++sig;
  }

  if (rem != 0) {
    rem *= 10;
    if (rem / value.den >= 5) {
      auto i = static_cast<std::ptrdiff_t>(digits.size()) - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9') {
        digits[static_cast<std::size_t>(i)] = '0';
        --i;
      }
      if (i < 0) {
        digits.insert(digits.begin(), '1');
        ++point;
      } else {
        ++digits[static_cast<std::size_t>(i)];
      }
    }
  }

  std::string frac = digits.substr(point);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  std::string out = digits.substr(0, point);
  if (!frac.empty()) {
    out += '.';
    out += frac;
  }
  return out;
}

}  // namespace jna::domain
