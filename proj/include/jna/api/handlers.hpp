#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "jna/api/wire.hpp"
#include "jna/ingest/service_config.hpp"
#include "jna/rank/daily_cache.hpp"
#include "jna/store/post_store.hpp"

namespace jna::api {

using Params = std::multimap<std::string, std::string>;

struct ApiResponse {
  int status = 200;
  Json body;
};

// Request rejected before touching the store.
class RequestError : public std::runtime_error {
 public:
  RequestError(int status, std::string code, const std::string& message, std::string field = {})
      : std::runtime_error(message), status_(status), code_(std::move(code)), field_(std::move(field)) {}
  int status() const noexcept { return status_; }
  const std::string& code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  int status_;
  std::string code_;
  std::string field_;
};

// /api/posts parameters -> QuerySpec. Throws RequestError (400, or 413 for
// an oversized limit). Defaults: since = now - retention, until = now + 1s,
// sort = newest, dir = desc, offset = 0, limit = 20.
store::QuerySpec parse_posts_query(const Params& params, domain::Timestamp now,
                                   int retention_days,
                                   const std::unordered_map<std::string, std::string>& known_pages);

// The four read-only endpoints, independent of any HTTP machinery.
class ApiService {
 public:
  using NowFn = std::function<domain::Timestamp()>;

  ApiService(const store::PostStore& store, std::vector<ingest::Publisher> publishers,
             rank::DailySchedule schedule, NowFn now);

  ApiResponse posts(const Params& params) const;
  ApiResponse top10();
  ApiResponse grid();
  ApiResponse publishers() const;

 private:
  const std::string& page_name(const std::string& page_id) const;

  const store::PostStore& store_;
  std::vector<ingest::Publisher> publishers_;
  std::unordered_map<std::string, std::string> names_;
  rank::DailySchedule schedule_;
  NowFn now_;
  rank::DailyViewCache top10_cache_;
  rank::DailyViewCache grid_cache_;
};

}  // namespace jna::api
