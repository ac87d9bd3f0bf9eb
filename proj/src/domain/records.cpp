#include "jna/domain/records.hpp"

#include <json.hpp>

namespace jna::domain {

using nlohmann::ordered_json;

namespace {

const ordered_json& require(const ordered_json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end()) throw RecordError(std::string("missing field '") + field + "'");
  return *it;
}

std::string require_string(const ordered_json& j, const char* field) {
  const auto& v = require(j, field);
  if (!v.is_string()) throw RecordError(std::string("field '") + field + "' must be a string");
  return v.get<std::string>();
}

std::optional<std::string> optional_string(const ordered_json& j, const char* field) {
  const auto it = j.find(field);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw RecordError(std::string("field '") + field + "' must be a string or null");
  auto s = it->get<std::string>();
  if (s.empty()) return std::nullopt;
  return s;
}

Timestamp require_time(const ordered_json& j, const char* field) {
  const auto text = require_string(j, field);
  const auto t = parse_iso8601(text);
  if (!t) throw RecordError(std::string("field '") + field + "' is not an ISO-8601 UTC timestamp: " + text);
  return *t;
}

std::uint64_t require_count(const ordered_json& j, const char* field) {
  const auto& v = require(j, field);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  throw RecordError(std::string("field '") + field + "' must be a non-negative integer");
}

ordered_json nullable(const std::optional<std::string>& s) {
  return s ? ordered_json(*s) : ordered_json(nullptr);
}

}  // namespace

FeedRecord parse_record(std::string_view line) {
  ordered_json j;
  try {
    j = ordered_json::parse(line);
  } catch (const ordered_json::parse_error& e) {
    throw RecordError(std::string("malformed record: ") + e.what());
  }
  if (!j.is_object()) throw RecordError("record is not a JSON object");

  FeedRecord r;
  r.post_id = require_string(j, "post_id");
  r.page_id = require_string(j, "page_id");
  r.posted_at = require_time(j, "posted_at");
  r.message = require_string(j, "message");
  r.link_url = optional_string(j, "link_url");
  r.image_url = optional_string(j, "image_url");
  r.permalink = require_string(j, "permalink");
  r.engagement.like = require_count(j, "like");
  r.engagement.comment = require_count(j, "comment");
  r.engagement.share = require_count(j, "share");
  r.engagement.love = require_count(j, "love");
  r.engagement.haha = require_count(j, "haha");
  r.engagement.wow = require_count(j, "wow");
  r.engagement.sad = require_count(j, "sad");
  r.engagement.angry = require_count(j, "angry");
  if (j.contains("retrieved_at") && !j["retrieved_at"].is_null())
    r.retrieved_at = require_time(j, "retrieved_at");

  if (r.post_id.empty()) throw RecordError("post_id is empty");
  if (r.page_id.empty()) throw RecordError("page_id is empty");
  if (r.permalink.empty()) throw RecordError("permalink is empty");
  return r;
}

std::string serialize_record(const FeedRecord& r) {
  ordered_json j;
  j["post_id"] = r.post_id;
  j["page_id"] = r.page_id;
  j["posted_at"] = format_iso8601(r.posted_at);
  if (r.retrieved_at) j["retrieved_at"] = format_iso8601(*r.retrieved_at);
  j["message"] = r.message;
  j["link_url"] = nullable(r.link_url);
  j["image_url"] = nullable(r.image_url);
  j["permalink"] = r.permalink;
  j["like"] = r.engagement.like;
  j["comment"] = r.engagement.comment;
  j["share"] = r.engagement.share;
  j["love"] = r.engagement.love;
  j["haha"] = r.engagement.haha;
  j["wow"] = r.engagement.wow;
  j["sad"] = r.engagement.sad;
  j["angry"] = r.engagement.angry;
  return j.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

Post to_post(const FeedRecord& r, Timestamp retrieved_at) {
  return Post{r.post_id,   r.page_id,   r.posted_at, retrieved_at, r.message,
              r.link_url,  r.image_url, r.permalink, r.engagement};
}

FeedRecord to_record(const Post& p) {
  return FeedRecord{p.post_id,   p.page_id,   p.posted_at,  p.message,     p.link_url,
                    p.image_url, p.permalink, p.engagement, p.retrieved_at};
}

}  // namespace jna::domain
