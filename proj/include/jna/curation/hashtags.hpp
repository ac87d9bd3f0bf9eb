#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jna::curation {

struct TweetRecord {
  std::string tweet_id;
  std::string text;
  std::set<std::string> hashtags;  // case-folded, without '#'
  std::vector<std::string> urls;   // as found in the tweet
};

// "#BlueWave" -> "bluewave".
std::string normalize_hashtag(std::string_view tag);

// For each hashtag outside `tags`, the number of tweets in which it appears
// together with at least one member of `tags`.
std::map<std::string, std::size_t> cooccurrence_counts(const std::set<std::string>& tags,
                                                       std::span<const TweetRecord> corpus);

// Snowball expansion: each round adds every hashtag co-occurring with the
// current set in at least `min_cooccurrence` tweets. Seeds are normalized
// first. Throws std::invalid_argument for empty seeds.
std::set<std::string> expand_hashtags(const std::set<std::string>& seeds,
                                      std::span<const TweetRecord> corpus,
                                      std::size_t min_cooccurrence, int rounds = 1);

}  // namespace jna::curation
