#pragma once

#include <filesystem>

#include "jna/ingest/clock.hpp"
#include "jna/ingest/connector.hpp"

namespace jna::ingest {

struct FixtureOptions {
  std::size_t page_size = 25;
  int max_requests_per_hour = kDefaultRequestsPerHour;
};

// Serves `<dir>/<page_id>.jsonl` record streams. Only records already
// posted by the clock's current time are visible, newest first, so a
// fixture directory replays like a live feed under a virtual clock. Files
// are re-read on every request.
class FixtureConnector final : public PageFeedConnector {
 public:
  FixtureConnector(std::filesystem::path dir, const Clock& clock, FixtureOptions options = {});

  FeedPage fetch_posts(const std::string& page_id, domain::Timestamp since,
                       const std::optional<std::string>& cursor) override;

  int max_requests_per_hour() const override { return options_.max_requests_per_hour; }

  std::size_t requests() const noexcept { return requests_; }

 private:
  std::filesystem::path dir_;
  const Clock& clock_;
  FixtureOptions options_;
  std::size_t requests_ = 0;
};

// Reads a whole record stream file. Throws domain::RecordError with the
// line number on malformed input.
std::vector<domain::FeedRecord> read_record_file(const std::filesystem::path& file);

}  // namespace jna::ingest
