#include "jna/ingest/service_config.hpp"

#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "jna/rank/daily_window.hpp"
#include "jna/store/post_store.hpp"

namespace jna::ingest {

using nlohmann::json;

std::vector<std::string> ServiceConfig::page_ids() const {
  std::vector<std::string> ids;
  ids.reserve(publishers.size());
  for (const auto& p : publishers) ids.push_back(p.page_id);
  return ids;
}

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string resolve(const std::filesystem::path& base, const std::string& p) {
  if (p.empty() || p == ":memory:") return p;
  const std::filesystem::path path(p);
  return path.is_absolute() || base.empty() ? p : (base / path).string();
}

template <typename T>
T field(const json& j, const char* name, T fallback) {
  const auto it = j.find(name);
  if (it == j.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config field '") + name + "' has the wrong type");
  }
}

std::vector<Publisher> publishers_from(const json& arr) {
  if (!arr.is_array()) throw ConfigError("'publishers' must be an array");
  std::vector<Publisher> out;
  std::set<std::string> ids;
  for (const auto& p : arr) {
    if (!p.is_object()) throw ConfigError("publisher entries must be objects");
    Publisher pub{field<std::string>(p, "page_id", ""), field<std::string>(p, "page_name", ""),
                  field<std::string>(p, "site_base_url", "")};
    if (pub.page_id.empty()) throw ConfigError("publisher without page_id");
    if (!ids.insert(pub.page_id).second) throw ConfigError("duplicate page_id " + pub.page_id);
    if (pub.page_name.empty()) pub.page_name = pub.page_id;
    out.push_back(std::move(pub));
  }
  return out;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::vector<Publisher> parse_publishers(const std::string& json_text) {
  const auto j = parse_json(json_text);
  if (!j.is_object() || !j.contains("publishers"))
    throw ConfigError("publisher file must be an object with a 'publishers' array");
  return publishers_from(j["publishers"]);
}

std::vector<Publisher> load_publishers(const std::filesystem::path& path) {
  return parse_publishers(read_file(path));
}

std::string serialize_publishers(const std::vector<Publisher>& publishers) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& p : publishers)
    arr.push_back({{"page_id", p.page_id}, {"page_name", p.page_name},
                   {"site_base_url", p.site_base_url}});
  nlohmann::ordered_json doc;
  doc["publishers"] = std::move(arr);
  return doc.dump(2) + "\n";
}

ServiceConfig parse_service_config(const std::string& json_text,
                                   const std::filesystem::path& base_dir) {
  const auto j = parse_json(json_text);
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  ServiceConfig c;
  if (j.contains("publishers")) {
    c.publishers = publishers_from(j["publishers"]);
  } else if (const auto file = field<std::string>(j, "publishers_file", ""); !file.empty()) {
    c.publishers = load_publishers(resolve(base_dir, file));
  }
  c.poll_interval = domain::Seconds{field<std::int64_t>(j, "poll_interval_seconds", 3600)};
  c.rate_budget_per_hour = field<int>(j, "rate_budget_per_hour", 200);
  c.store_path = resolve(base_dir, field<std::string>(j, "store_path", c.store_path));
  c.retention_days = field<int>(j, "retention_days", 45);
  c.bind_address = field<std::string>(j, "bind_address", c.bind_address);
  c.port = field<int>(j, "port", c.port);
  c.timezone = field<std::string>(j, "timezone", c.timezone);
  c.cutoff_local_time = field<std::string>(j, "cutoff_local_time", c.cutoff_local_time);
  c.fixture_dir = resolve(base_dir, field<std::string>(j, "fixture_dir", ""));
  c.fixture_page_size = field<std::size_t>(j, "fixture_page_size", 25);
  c.static_dir = resolve(base_dir, field<std::string>(j, "static_dir", ""));

  if (c.poll_interval.count() < 1) throw ConfigError("poll_interval_seconds must be positive");
  if (c.rate_budget_per_hour < 1) throw ConfigError("rate_budget_per_hour must be positive");
  if (c.retention_days < store::kMinRetentionDays)
    throw ConfigError("retention_days must be at least " + std::to_string(store::kMinRetentionDays));
  if (c.port < 0 || c.port > 65535) throw ConfigError("port out of range");
  if (c.fixture_page_size < 1) throw ConfigError("fixture_page_size must be positive");
  try {
    rank::CivilZone zone(c.timezone);
    rank::parse_local_time(c.cutoff_local_time);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return c;
}

ServiceConfig load_service_config(const std::filesystem::path& path) {
  return parse_service_config(read_file(path), path.parent_path());
}

}  // namespace jna::ingest
