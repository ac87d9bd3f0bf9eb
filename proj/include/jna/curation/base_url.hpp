#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "jna/curation/hashtags.hpp"

namespace jna::curation {

// Site identity of a URL: lowercase host, "www." prefix removed, with
// scheme, credentials, port, path, query and fragment dropped. Scheme-less
// input ("breitbart.com/x") is accepted, so the result is a fixed point.
// Returns nullopt for anything without a plausible DNS host name or IPv4
// address.
std::optional<std::string> base_url(std::string_view url);

struct UrlCounts {
  std::map<std::string, std::size_t> counts;  // base url -> mentions
  std::size_t skipped = 0;                    // unparseable URLs
};

// Every mention counts, including repeats within one tweet.
UrlCounts extract_base_urls(std::span<const TweetRecord> corpus);

}  // namespace jna::curation
