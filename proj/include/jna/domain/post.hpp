#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "jna/domain/engagement.hpp"
#include "jna/domain/time.hpp"

namespace jna::domain {

struct Post {
  std::string post_id;
  std::string page_id;
  Timestamp posted_at{};
  Timestamp retrieved_at{};
  std::string message;
  std::optional<std::string> link_url;
  std::optional<std::string> image_url;
  std::string permalink;
  EngagementCounts engagement;

  friend bool operator==(const Post&, const Post&) = default;
};

class CorruptPost : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws CorruptPost when a Post invariant is violated.
void validate(const Post& p);

// max(1, retrieved_at - posted_at). Throws CorruptPost if retrieved_at < posted_at.
std::int64_t post_age_seconds(const Post& p);
std::int64_t clamped_age(Timestamp posted_at, Timestamp retrieved_at);

// Raw keys yield {count, 1}; age-adjusted keys yield {count, age}.
Ratio metric_value(const Post& p, MetricKey key);

}  // namespace jna::domain
