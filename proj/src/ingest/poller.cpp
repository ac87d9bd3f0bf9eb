#include "jna/ingest/poller.hpp"

#include <spdlog/spdlog.h>

#include <stdexcept>
#include <unordered_set>

namespace jna::ingest {

Poller::Poller(store::PostStore& store, PageFeedConnector& connector, PollerOptions options)
    : store_(store),
      connector_(connector),
      options_(options),
      budget_(connector.max_requests_per_hour()) {
  for (const auto& sp : store_.snapshot()->posts()) {
    auto& latest = latest_posted_[sp.post.page_id];
    latest = std::max(latest, sp.post.posted_at);
  }
}

domain::Timestamp Poller::since_for(const std::string& page_id, domain::Timestamp now) const {
  const auto it = latest_posted_.find(page_id);
  if (it == latest_posted_.end()) return now - domain::kDay * options_.retention_days;
  return it->second - options_.watermark_overlap;
}

PollReport Poller::poll_once(std::span<const std::string> pages, domain::Timestamp now) {
  if (pages.empty()) throw std::invalid_argument("poll_once needs at least one page");

  PollReport report;
  report.run_at = now;
  std::vector<domain::Post> fresh;
  std::unordered_set<std::string> seen;
  const auto stored = store_.snapshot();

  for (const auto& page_id : pages) {
    const auto since = since_for(page_id, now);
    std::optional<std::string> cursor;
    bool complete = false;
    try {
      while (true) {
        if (!budget_.try_acquire(now)) {
          report.errors.push_back({page_id, "rate budget exhausted"});
          break;
        }
        ++report.requests_used;
        auto page = connector_.fetch_posts(page_id, since, cursor);
        for (auto& r : page.records) {
          if (r.page_id != page_id) {
            ++report.posts_rejected;
            report.errors.push_back({page_id, "post " + r.post_id + " belongs to page " + r.page_id});
            continue;
          }
          if (r.posted_at > now) {
            ++report.posts_rejected;
            report.errors.push_back({page_id, "post " + r.post_id + " is dated after the poll time"});
            continue;
          }
          if (stored->find(r.post_id) || !seen.insert(r.post_id).second) {
            ++report.posts_skipped_duplicate;
            continue;
          }
          fresh.push_back(domain::to_post(r, now));
        }
        if (!page.next_cursor) {
          complete = true;
          break;
        }
        cursor = std::move(page.next_cursor);
      }
    } catch (const ConnectorError& e) {
      report.errors.push_back({page_id, e.what()});
    }
    if (complete) ++report.pages_polled;
  }

  const auto outcomes = store_.insert_batch(fresh);
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i] == store::InsertOutcome::Inserted) {
      ++report.posts_new;
      auto& latest = latest_posted_[fresh[i].page_id];
      latest = std::max(latest, fresh[i].posted_at);
    } else {
      ++report.posts_skipped_duplicate;
    }
  }

  spdlog::info("poll at {}: {} pages, {} new, {} duplicate, {} rejected, {} requests, {} errors",
               domain::format_iso8601(now), report.pages_polled, report.posts_new,
               report.posts_skipped_duplicate, report.posts_rejected, report.requests_used,
               report.errors.size());
  for (const auto& e : report.errors) spdlog::warn("poll error on page {}: {}", e.page_id, e.reason);
  return report;
}

}  // namespace jna::ingest
