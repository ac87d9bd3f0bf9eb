#pragma once

#include <chrono>
#include <stdexcept>
#include <string>

#include "jna/domain/time.hpp"

namespace jna::rank {

class InvalidTimeZone : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A civil (IANA) time zone with daylight-saving rules.
class CivilZone {
 public:
  // Throws InvalidTimeZone for identifiers the zone database does not know.
  explicit CivilZone(std::string id);

  const std::string& id() const noexcept { return id_; }

  // Local calendar date at instant t.
  std::chrono::year_month_day local_date(domain::Timestamp t) const;

  // The instant at which the local wall clock shows `date` + `time_of_day`.
  // Wall times skipped by a forward transition resolve to the later offset;
  // repeated wall times resolve to the first occurrence.
  domain::Timestamp to_utc(std::chrono::year_month_day date, domain::Seconds time_of_day) const;

  // UTC offset in effect at t.
  domain::Seconds offset_at(domain::Timestamp t) const;

 private:
  std::string id_;
};

}  // namespace jna::rank
