#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jna/curation/base_url.hpp"
#include "jna/curation/hashtags.hpp"
#include "jna/curation/selection.hpp"

// File formats of the curation pipeline. JSON Lines files carry one object
// per line; blank lines are ignored.
//
//   tweets     {"tweet_id", "text", "hashtags": [..], "urls": [..]}
//   hashtags   one hashtag per line, '#' optional
//   counts     TSV: base_url <TAB> mentions, by mentions desc then base_url
//   codings    {"base_url", "coders": [[tags], [tags], [tags]], "override": [tags]?}
//   criteria   TSV: base_url <TAB> tag <TAB> tag ...
//   pages      {"base_url", "page_id", "page_name", "site_lists_page", "page_lists_site"}
//   ledger     one SourceSite per line (see ledger_line)
namespace jna::curation {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<TweetRecord> read_tweets(const std::filesystem::path& path);

std::set<std::string> read_hashtags(const std::filesystem::path& path);
void write_hashtags(std::ostream& out, const std::set<std::string>& tags);

void write_url_counts(std::ostream& out, const UrlCounts& counts);
std::map<std::string, std::uint64_t> read_url_counts(const std::filesystem::path& path);

std::vector<SourceSite> read_codings(const std::filesystem::path& path);

std::vector<std::pair<std::string, CriteriaSet>> read_criteria_table(
    const std::filesystem::path& path);

struct PageLink {
  std::string base_url;
  std::string page_id;
  std::string page_name;
  PageVerification verification;
};
std::vector<PageLink> read_page_links(const std::filesystem::path& path);

std::string ledger_line(const SourceSite& s);
SourceSite parse_ledger_line(const std::string& line);
std::vector<SourceSite> read_ledger(const std::filesystem::path& path);
void write_ledger(std::ostream& out, const std::vector<SourceSite>& sites);

}  // namespace jna::curation
