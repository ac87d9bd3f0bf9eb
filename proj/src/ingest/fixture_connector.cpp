#include "jna/ingest/fixture_connector.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace jna::ingest {

std::vector<domain::FeedRecord> read_record_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw domain::RecordError("cannot open " + file.string());
  std::vector<domain::FeedRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(domain::parse_record(line));
    } catch (const domain::RecordError& e) {
      throw domain::RecordError(file.filename().string() + ":" + std::to_string(line_no) + ": " +
                                e.what());
    }
  }
  return out;
}

FixtureConnector::FixtureConnector(std::filesystem::path dir, const Clock& clock,
                                   FixtureOptions options)
    : dir_(std::move(dir)), clock_(clock), options_(options) {
  if (options_.page_size == 0) options_.page_size = 1;
}

FeedPage FixtureConnector::fetch_posts(const std::string& page_id, domain::Timestamp since,
                                       const std::optional<std::string>& cursor) {
  ++requests_;
  if (page_id.empty() || page_id.find('/') != std::string::npos || page_id.front() == '.')
    throw ConnectorError("invalid page id '" + page_id + "'");
  const auto file = dir_ / (page_id + ".jsonl");
  if (!std::filesystem::exists(file)) throw ConnectorError("unknown page '" + page_id + "'");

  std::size_t offset = 0;
  if (cursor) {
    const auto& c = *cursor;
    const auto [end, ec] = std::from_chars(c.data(), c.data() + c.size(), offset);
    if (ec != std::errc{} || end != c.data() + c.size())
      throw ConnectorError("invalid cursor '" + c + "'");
  }

  std::vector<domain::FeedRecord> all;
  try {
    all = read_record_file(file);
  } catch (const domain::RecordError& e) {
    throw ConnectorError(e.what());
  }

  const auto now = clock_.now();
  std::erase_if(all, [&](const domain::FeedRecord& r) {
    return r.posted_at < since || r.posted_at > now;
  });
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.posted_at != b.posted_at) return a.posted_at > b.posted_at;
    return a.post_id < b.post_id;
  });

  FeedPage page;
  if (offset >= all.size()) return page;
  const auto end = std::min(all.size(), offset + options_.page_size);
  for (auto i = offset; i < end; ++i) {
    auto r = std::move(all[i]);
    r.retrieved_at.reset();
    page.records.push_back(std::move(r));
  }
  if (end < all.size()) page.next_cursor = std::to_string(end);
  return page;
}

}  // namespace jna::ingest
