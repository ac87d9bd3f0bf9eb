#pragma once

#include <string>

#include "jna/domain/time.hpp"
#include "jna/rank/civil_zone.hpp"

namespace jna::rank {

// Half-open [cutoff - 24h, cutoff) on posted_at.
struct DailyWindow {
  domain::Timestamp cutoff{};

  domain::Timestamp start() const noexcept { return cutoff - domain::kDay; }
  bool contains(domain::Timestamp t) const noexcept { return t >= start() && t < cutoff; }

  friend bool operator==(const DailyWindow&, const DailyWindow&) = default;
};

struct DailySchedule {
  CivilZone zone{"America/New_York"};
  domain::Seconds cutoff_local{17 * 3600};  // seconds after local midnight
};

// "HH:MM" or "HH:MM:SS" -> seconds after midnight. Throws std::invalid_argument.
domain::Seconds parse_local_time(const std::string& text);

// The window ending at the latest cutoff instant <= now.
DailyWindow current_daily_window(domain::Timestamp now, const CivilZone& zone,
                                 domain::Seconds cutoff_local);
inline DailyWindow current_daily_window(domain::Timestamp now, const DailySchedule& s) {
  return current_daily_window(now, s.zone, s.cutoff_local);
}

}  // namespace jna::rank
