#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jna/domain/records.hpp"

namespace jna::ingest {

inline constexpr int kDefaultRequestsPerHour = 200;

class ConnectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FeedPage {
  std::vector<domain::FeedRecord> records;
  std::optional<std::string> next_cursor;
};

// Source of publisher posts. One fetch_posts call is one request against
// the connector's hourly budget. Implementations must eventually return a
// page without next_cursor.
class PageFeedConnector {
 public:
  virtual ~PageFeedConnector() = default;

  // Posts of `page_id` with posted_at >= since. Throws ConnectorError.
  virtual FeedPage fetch_posts(const std::string& page_id, domain::Timestamp since,
                               const std::optional<std::string>& cursor) = 0;

  virtual int max_requests_per_hour() const = 0;
};

}  // namespace jna::ingest
