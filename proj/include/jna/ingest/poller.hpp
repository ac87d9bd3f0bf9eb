#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jna/ingest/connector.hpp"
#include "jna/ingest/request_budget.hpp"
#include "jna/store/post_store.hpp"

namespace jna::ingest {

struct PollError {
  std::string page_id;
  std::string reason;
};

// posts_new + posts_skipped_duplicate + posts_rejected equals the number of
// records the connector returned during the run.
struct PollReport {
  domain::Timestamp run_at{};
  int pages_polled = 0;  // pages whose feed was read to the end without error
  std::size_t posts_new = 0;
  std::size_t posts_skipped_duplicate = 0;
  std::size_t posts_rejected = 0;
  int requests_used = 0;
  std::vector<PollError> errors;
};

struct PollerOptions {
  int retention_days = store::kDefaultRetentionDays;
  domain::Seconds watermark_overlap{600};
};

// Pulls new posts from a connector into the store. Posts already stored are
// never touched again, so the first retrieved engagement snapshot is final.
class Poller {
 public:
  Poller(store::PostStore& store, PageFeedConnector& connector, PollerOptions options = {});

  // One pass over `pages` (must be non-empty). Per-page connector failures
  // are reported, not thrown. A store failure throws store::StoreError and
  // leaves the store without any post of this run.
  PollReport poll_once(std::span<const std::string> pages, domain::Timestamp now);

  // Lower bound passed as `since` on the next fetch of this page.
  domain::Timestamp since_for(const std::string& page_id, domain::Timestamp now) const;

 private:
  store::PostStore& store_;
  PageFeedConnector& connector_;
  PollerOptions options_;
  RequestBudget budget_;
  std::map<std::string, domain::Timestamp> latest_posted_;
};

}  // namespace jna::ingest
