#include "jna/rank/daily_window.hpp"

#include <charconv>
#include <stdexcept>

namespace jna::rank {

domain::Seconds parse_local_time(const std::string& text) {
  int parts[3] = {0, 0, 0};
  std::size_t n = 0;
  const char* p = text.data();
  const char* end = text.data() + text.size();
  while (p < end && n < 3) {
    const auto [next, ec] = std::from_chars(p, end, parts[n]);
    if (ec != std::errc{} || next - p != 2) break;
    ++n;
    p = next;
    if (p == end) break;
    if (*p != ':') {
      n = 0;
      break;
    }
    ++p;
  }
  if (p != end || n < 2 || parts[0] > 23 || parts[1] > 59 || parts[2] > 59)
    throw std::invalid_argument("local time must be HH:MM or HH:MM:SS, got '" + text + "'");
  return domain::Seconds{parts[0] * 3600 + parts[1] * 60 + parts[2]};
}

DailyWindow current_daily_window(domain::Timestamp now, const CivilZone& zone,
                                 domain::Seconds cutoff_local) {
  using namespace std::chrono;
  const auto today = zone.local_date(now);
  auto cutoff = zone.to_utc(today, cutoff_local);
  if (cutoff > now) cutoff = zone.to_utc(year_month_day{sys_days{today} - days{1}}, cutoff_local);
  return DailyWindow{cutoff};
}

}  // namespace jna::rank
