#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "jna/domain/time.hpp"

namespace jna::ingest {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Publisher {
  std::string page_id;
  std::string page_name;
  std::string site_base_url;

  friend bool operator==(const Publisher&, const Publisher&) = default;
};

// JSON service configuration. Relative paths resolve against the config
// file's directory.
//
//   {
//     "publishers": [{"page_id": ..., "page_name": ..., "site_base_url": ...}],
//     "publishers_file": "tracked.json",        // alternative to "publishers"
//     "poll_interval_seconds": 3600,
//     "rate_budget_per_hour": 200,
//     "store_path": "jna.db",
//     "retention_days": 45,
//     "bind_address": "127.0.0.1",
//     "port": 8080,
//     "timezone": "America/New_York",
//     "cutoff_local_time": "17:00",
//     "fixture_dir": "feeds/",
//     "fixture_page_size": 25,
//     "static_dir": "webui/dist"
//   }
struct ServiceConfig {
  std::vector<Publisher> publishers;
  domain::Seconds poll_interval{3600};
  int rate_budget_per_hour = 200;
  std::string store_path = "jna.db";
  int retention_days = 45;
  std::string bind_address = "127.0.0.1";
  int port = 8080;
  std::string timezone = "America/New_York";
  std::string cutoff_local_time = "17:00";
  std::string fixture_dir;
  std::size_t fixture_page_size = 25;
  std::string static_dir;

  std::vector<std::string> page_ids() const;
};

// Throws ConfigError, including for an unknown time zone or a retention
// below 31 days.
ServiceConfig parse_service_config(const std::string& json_text,
                                   const std::filesystem::path& base_dir = {});
ServiceConfig load_service_config(const std::filesystem::path& path);

// {"publishers": [...]} as written by the curation `select` step.
std::vector<Publisher> parse_publishers(const std::string& json_text);
std::vector<Publisher> load_publishers(const std::filesystem::path& path);
std::string serialize_publishers(const std::vector<Publisher>& publishers);

}  // namespace jna::ingest
