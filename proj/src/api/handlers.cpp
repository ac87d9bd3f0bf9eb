#include "jna/api/handlers.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "jna/store/text.hpp"

namespace jna::api {

namespace {

const std::set<std::string> kPostsParams{"since", "until", "q",      "publisher",
                                         "sort",  "dir",   "offset", "limit"};

RequestError bad(const std::string& field, const std::string& message) {
  return RequestError(400, "invalid_parameter", message, field);
}

std::optional<std::string> single(const Params& params, const std::string& name) {
  const auto [lo, hi] = params.equal_range(name);
  if (lo == hi) return std::nullopt;
  if (std::next(lo) != hi)
    throw RequestError(400, "duplicate_parameter", "parameter given more than once", name);
  return lo->second;
}

domain::Timestamp time_param(const std::string& field, const std::string& text) {
  const auto t = domain::parse_iso8601(text);
  if (!t) throw bad(field, "expected an ISO-8601 UTC timestamp such as 2018-11-01T17:00:00Z");
  return *t;
}

std::size_t count_param(const std::string& field, const std::string& text) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || end != text.data() + text.size())
    throw bad(field, "expected a non-negative integer");
  return v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string::npos ? s.size() : comma;
    out.push_back(s.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

store::QuerySpec parse_posts_query(const Params& params, domain::Timestamp now,
                                   int retention_days,
                                   const std::unordered_map<std::string, std::string>& known_pages) {
  for (const auto& [name, value] : params)
    if (!kPostsParams.contains(name))
      throw RequestError(400, "unknown_parameter", "unknown parameter '" + name + "'", name);

  store::QuerySpec q;
  q.since = now - domain::kDay * retention_days;
  q.until = now + domain::Seconds{1};
  if (const auto v = single(params, "since")) q.since = time_param("since", *v);
  if (const auto v = single(params, "until")) q.until = time_param("until", *v);
  if (const auto v = single(params, "q"); v && !v->empty()) q.keyword = *v;
  if (const auto v = single(params, "publisher"); v && !v->empty()) {
    std::vector<std::string> ids;
    for (auto& id : split_commas(*v)) {
      if (!known_pages.contains(id)) throw bad("publisher", "unknown publisher '" + id + "'");
      ids.push_back(std::move(id));
    }
    q.page_ids = std::move(ids);
  }
  if (const auto v = single(params, "sort")) {
    const auto key = rank::parse_sort_token(*v);
    if (!key) throw bad("sort", "sort must be newest, oldest or <metric>_<raw|adj>");
    q.sort = *key;
  }
  if (const auto v = single(params, "dir")) {
    if (*v == "desc")
      q.direction = rank::Direction::Descending;
    else if (*v == "asc")
      q.direction = rank::Direction::Ascending;
    else
      throw bad("dir", "dir must be asc or desc");
  }
  if (const auto v = single(params, "offset")) q.offset = count_param("offset", *v);
  if (const auto v = single(params, "limit")) {
    q.limit = count_param("limit", *v);
    if (q.limit > store::kMaxQueryLimit)
      throw RequestError(413, "limit_too_large",
                         "limit must not exceed " + std::to_string(store::kMaxQueryLimit), "limit");
  }

  try {
    store::validate(q, now, retention_days);
  } catch (const store::QueryError& e) {
    throw bad(e.field() == "page_ids" ? "publisher" : e.field(), e.what());
  }
  return q;
}

ApiService::ApiService(const store::PostStore& store, std::vector<ingest::Publisher> publishers,
                       rank::DailySchedule schedule, NowFn now)
    : store_(store),
      publishers_(std::move(publishers)),
      schedule_(std::move(schedule)),
      now_(std::move(now)),
      top10_cache_(store, schedule_, rank::kTopListSize),
      grid_cache_(store, schedule_, rank::kGridSize) {
  for (const auto& p : publishers_) names_.emplace(p.page_id, p.page_name);
  std::sort(publishers_.begin(), publishers_.end(), [](const auto& a, const auto& b) {
    if (a.page_name != b.page_name) return a.page_name < b.page_name;
    return a.page_id < b.page_id;
  });
}

const std::string& ApiService::page_name(const std::string& page_id) const {
  const auto it = names_.find(page_id);
  return it == names_.end() ? page_id : it->second;
}

ApiResponse ApiService::posts(const Params& params) const {
  const auto now = now_();
  store::QuerySpec q;
  try {
    q = parse_posts_query(params, now, store_.options().retention_days, names_);
  } catch (const RequestError& e) {
    return {e.status(), api_error(e.code(), e.what(), e.field())};
  }
  const auto result = store_.query(q, now);

  Json body;
  body["total"] = result.total_matching;
  body["offset"] = q.offset;
  body["limit"] = q.limit;
  body["sort"] = rank::sort_token(q.sort);
  body["dir"] = q.direction == rank::Direction::Descending ? "desc" : "asc";
  body["since"] = domain::format_iso8601(q.since);
  body["until"] = domain::format_iso8601(q.until);
  Json list = Json::array();
  for (const auto& p : result.posts) list.push_back(api_post(p, page_name(p.page_id)));
  body["posts"] = std::move(list);
  return {200, std::move(body)};
}

ApiResponse ApiService::top10() {
  const auto view = top10_cache_.get(now_());
  Json body;
  body["window"] = window_json(view->window, schedule_);
  body["metric"] = domain::metric_token(view->metric);
  body["k"] = view->k;
  Json list = Json::array();
  for (const auto& e : view->entries) list.push_back(api_post(e.post, page_name(e.post.page_id)));
  body["posts"] = std::move(list);
  return {200, std::move(body)};
}

ApiResponse ApiService::grid() {
  const auto view = grid_cache_.get(now_());
  Json body;
  body["window"] = window_json(view->window, schedule_);
  body["metric"] = domain::metric_token(view->metric);
  Json cells = Json::array();
  std::size_t rank = 0;
  for (const auto& e : view->entries) {
    const auto& p = e.post;
    Json cell;
    cell["rank"] = ++rank;
    cell["post_id"] = p.post_id;
    cell["image_url"] = p.image_url ? Json(*p.image_url) : Json(nullptr);
    cell["page_name"] = page_name(p.page_id);
    cell["posted_at"] = domain::format_iso8601(p.posted_at);
    cell["message_excerpt"] = store::excerpt(p.message, kExcerptLength);
    cell["engagement"] = engagement_json(p.engagement);
    cell["age_adjusted_total"] = domain::to_decimal_string(e.value, kDecimalDigits);
    cell["explorer_link"] = explorer_link(p.post_id);
    cells.push_back(std::move(cell));
  }
  body["cells"] = std::move(cells);
  return {200, std::move(body)};
}

ApiResponse ApiService::publishers() const {
  Json list = Json::array();
  for (const auto& p : publishers_)
    list.push_back({{"page_id", p.page_id}, {"page_name", p.page_name},
                    {"site_base_url", p.site_base_url}});
  Json body;
  body["publishers"] = std::move(list);
  return {200, std::move(body)};
}

}  // namespace jna::api
