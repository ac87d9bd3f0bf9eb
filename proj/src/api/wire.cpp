#include "jna/api/wire.hpp"

#include <cctype>
#include <cstdio>

namespace jna::api {

using domain::kMetricBases;

Json engagement_json(const domain::EngagementCounts& e) {
  Json j = Json::object();
  for (const auto base : kMetricBases)
    j[std::string(domain::base_token(base))] = domain::count_for(e, base);
  return j;
}

Json age_adjusted_json(const domain::Post& p) {
  Json j = Json::object();
  for (const auto base : kMetricBases)
    j[std::string(domain::base_token(base))] =
        domain::to_decimal_string(domain::metric_value(p, {base, true}), kDecimalDigits);
  return j;
}

Json api_post(const domain::Post& p, const std::string& page_name) {
  Json j;
  j["post_id"] = p.post_id;
  j["page_id"] = p.page_id;
  j["page_name"] = page_name;
  j["posted_at"] = domain::format_iso8601(p.posted_at);
  j["retrieved_at"] = domain::format_iso8601(p.retrieved_at);
  j["message"] = p.message;
  j["link_url"] = p.link_url ? Json(*p.link_url) : Json(nullptr);
  j["image_url"] = p.image_url ? Json(*p.image_url) : Json(nullptr);
  j["permalink"] = p.permalink;
  j["engagement"] = engagement_json(p.engagement);
  j["age_adjusted"] = age_adjusted_json(p);
  return j;
}

Json window_json(const rank::DailyWindow& w, const rank::DailySchedule& schedule) {
  const auto secs = schedule.cutoff_local.count();
  char local[48];
  std::snprintf(local, sizeof local, "%02lld:%02lld", static_cast<long long>(secs / 3600),
                static_cast<long long>(secs / 60 % 60));
  Json j;
  j["start"] = domain::format_iso8601(w.start());
  j["cutoff"] = domain::format_iso8601(w.cutoff);
  j["timezone"] = schedule.zone.id();
  j["cutoff_local_time"] = local;
  return j;
}

Json api_error(const std::string& code, const std::string& message, const std::string& field) {
  Json j;
  j["code"] = code;
  j["message"] = message;
  if (!field.empty()) j["field"] = field;
  return j;
}

std::string url_encode(const std::string& s) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (const unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += kHex[c >> 4];
      out += kHex[c & 15];
    }
  }
  return out;
}

std::string explorer_link(const std::string& post_id) {
  return "/explorer?focus=" + url_encode(post_id);
}

}  // namespace jna::api
