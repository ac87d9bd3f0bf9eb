#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jna/domain/post.hpp"

namespace jna::domain {

// One line of the post record stream. Connector fixtures and store exports
// share this format: a single JSON object per line with the field names
//
//   post_id, page_id, posted_at, message, link_url, image_url, permalink,
//   like, comment, share, love, haha, wow, sad, angry
//
// plus `retrieved_at` on export lines. Timestamps are ISO-8601 UTC strings;
// absent URLs are null.
struct FeedRecord {
  std::string post_id;
  std::string page_id;
  Timestamp posted_at{};
  std::string message;
  std::optional<std::string> link_url;
  std::optional<std::string> image_url;
  std::string permalink;
  EngagementCounts engagement;
  std::optional<Timestamp> retrieved_at;

  friend bool operator==(const FeedRecord&, const FeedRecord&) = default;
};

class RecordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

FeedRecord parse_record(std::string_view line);
std::string serialize_record(const FeedRecord& r);

Post to_post(const FeedRecord& r, Timestamp retrieved_at);
FeedRecord to_record(const Post& p);

}  // namespace jna::domain
