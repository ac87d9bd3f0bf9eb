#include "jna/rank/civil_zone.hpp"

#include <unicode/ucal.h>
#include <unicode/ustring.h>

#include <memory>
#include <vector>

namespace jna::rank {

namespace {

std::vector<UChar> to_uchars(const std::string& s) {
  std::vector<UChar> out(s.size() + 1);
  u_uastrncpy(out.data(), s.c_str(), static_cast<int32_t>(out.size()));
  return out;
}

using CalendarPtr = std::unique_ptr<UCalendar, void (*)(UCalendar*)>;

CalendarPtr open_calendar(const std::string& id) {
  const auto zone = to_uchars(id);
  UErrorCode status = U_ZERO_ERROR;
  UCalendar* cal = ucal_open(zone.data(), -1, "en_US_POSIX", UCAL_GREGORIAN, &status);
  if (U_FAILURE(status)) throw InvalidTimeZone("cannot open calendar for zone '" + id + "'");
  CalendarPtr ptr(cal, ucal_close);
  ucal_setAttribute(cal, UCAL_REPEATED_WALL_TIME, UCAL_WALLTIME_FIRST);
  ucal_setAttribute(cal, UCAL_SKIPPED_WALL_TIME, UCAL_WALLTIME_NEXT_VALID);
  return ptr;
}

void check(UErrorCode status, const char* what) {
  if (U_FAILURE(status)) throw std::runtime_error(std::string(what) + ": " + u_errorName(status));
}

}  // namespace

CivilZone::CivilZone(std::string id) : id_(std::move(id)) {
  const auto zone = to_uchars(id_);
  UChar canonical[128];
  UBool is_system = false;
  UErrorCode status = U_ZERO_ERROR;
  ucal_getCanonicalTimeZoneID(zone.data(), -1, canonical, 128, &is_system, &status);
  if (U_FAILURE(status) || !is_system) throw InvalidTimeZone("unknown time zone '" + id_ + "'");
}

std::chrono::year_month_day CivilZone::local_date(domain::Timestamp t) const {
  auto cal = open_calendar(id_);
  UErrorCode status = U_ZERO_ERROR;
  ucal_setMillis(cal.get(), static_cast<UDate>(domain::to_unix(t)) * 1000.0, &status);
  const int y = ucal_get(cal.get(), UCAL_EXTENDED_YEAR, &status);
  const int m = ucal_get(cal.get(), UCAL_MONTH, &status);
  const int d = ucal_get(cal.get(), UCAL_DATE, &status);
  check(status, "local_date");
  return std::chrono::year_month_day{std::chrono::year{y},
                                     std::chrono::month{static_cast<unsigned>(m + 1)},
                                     std::chrono::day{static_cast<unsigned>(d)}};
}

domain::Timestamp CivilZone::to_utc(std::chrono::year_month_day date,
                                    domain::Seconds time_of_day) const {
  auto cal = open_calendar(id_);
  const auto secs = time_of_day.count();
  UErrorCode status = U_ZERO_ERROR;
  ucal_clear(cal.get());
  ucal_setDateTime(cal.get(), static_cast<int>(date.year()),
                   static_cast<int>(static_cast<unsigned>(date.month())) - 1,
                   static_cast<int>(static_cast<unsigned>(date.day())),
                   static_cast<int>(secs / 3600), static_cast<int>(secs / 60 % 60),
                   static_cast<int>(secs % 60), &status);
  const UDate millis = ucal_getMillis(cal.get(), &status);
  check(status, "to_utc");
  return domain::from_unix(static_cast<std::int64_t>(millis / 1000.0));
}

domain::Seconds CivilZone::offset_at(domain::Timestamp t) const {
  auto cal = open_calendar(id_);
  UErrorCode status = U_ZERO_ERROR;
  ucal_setMillis(cal.get(), static_cast<UDate>(domain::to_unix(t)) * 1000.0, &status);
  const int zone = ucal_get(cal.get(), UCAL_ZONE_OFFSET, &status);
  const int dst = ucal_get(cal.get(), UCAL_DST_OFFSET, &status);
  check(status, "offset_at");
  return domain::Seconds{(zone + dst) / 1000};
}

}  // namespace jna::rank
