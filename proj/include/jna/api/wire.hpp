#pragma once

#include <json.hpp>
#include <string>

#include "jna/domain/post.hpp"
#include "jna/rank/daily_window.hpp"

namespace jna::api {

using Json = nlohmann::ordered_json;

inline constexpr std::size_t kExcerptLength = 280;
inline constexpr int kDecimalDigits = 9;

// ApiPost: post_id, page_id, page_name, posted_at, retrieved_at, message,
// link_url, image_url, permalink, engagement{like..angry, all} as integers,
// age_adjusted{same keys} as decimal strings.
Json api_post(const domain::Post& p, const std::string& page_name);

// The nine engagement keys with integer values.
Json engagement_json(const domain::EngagementCounts& e);
// The nine keys as decimal strings of count / clamped age.
Json age_adjusted_json(const domain::Post& p);

Json window_json(const rank::DailyWindow& w, const rank::DailySchedule& schedule);

// ApiError: {code, message, field?}.
Json api_error(const std::string& code, const std::string& message,
               const std::string& field = {});

// Explorer deep link focused on one post.
std::string explorer_link(const std::string& post_id);

std::string url_encode(const std::string& s);

}  // namespace jna::api
