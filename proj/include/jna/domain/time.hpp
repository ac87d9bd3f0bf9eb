#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace jna::domain {

using Timestamp = std::chrono::sys_seconds;
using Seconds = std::chrono::seconds;

inline constexpr Seconds kHour{3600};
inline constexpr Seconds kDay{86400};

inline Timestamp from_unix(std::int64_t s) { return Timestamp{Seconds{s}}; }
inline std::int64_t to_unix(Timestamp t) { return t.time_since_epoch().count(); }

// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_iso8601(Timestamp t);

// Accepts "YYYY-MM-DDTHH:MM:SSZ" and the "+00:00" suffix form. Any other
// offset, missing field or out-of-range field yields nullopt.
std::optional<Timestamp> parse_iso8601(std::string_view text);

// Largest multiple of `interval` (counted from the epoch) that is <= t.
Timestamp floor_to(Timestamp t, Seconds interval);

}  // namespace jna::domain
