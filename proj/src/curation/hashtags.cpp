#include "jna/curation/hashtags.hpp"

#include <stdexcept>

#include "jna/store/text.hpp"

namespace jna::curation {

std::string normalize_hashtag(std::string_view tag) {
  while (!tag.empty() && tag.front() == '#') tag.remove_prefix(1);
  return store::fold_case(tag);
}

std::map<std::string, std::size_t> cooccurrence_counts(const std::set<std::string>& tags,
                                                       std::span<const TweetRecord> corpus) {
  std::map<std::string, std::size_t> counts;
  for (const auto& tweet : corpus) {
    bool hit = false;
    for (const auto& h : tweet.hashtags)
      if (tags.contains(h)) {
        hit = true;
        break;
      }
    if (!hit) continue;
    for (const auto& h : tweet.hashtags)
      if (!tags.contains(h)) ++counts[h];
  }
  return counts;
}

std::set<std::string> expand_hashtags(const std::set<std::string>& seeds,
                                      std::span<const TweetRecord> corpus,
                                      std::size_t min_cooccurrence, int rounds) {
  if (seeds.empty()) throw std::invalid_argument("seed hashtag set is empty");
  std::set<std::string> current;
  for (const auto& s : seeds) current.insert(normalize_hashtag(s));

  for (int round = 0; round < rounds; ++round) {
    std::set<std::string> added;
    for (const auto& [tag, n] : cooccurrence_counts(current, corpus))
      if (n >= min_cooccurrence) added.insert(tag);
    if (added.empty()) break;
    current.insert(added.begin(), added.end());
  }
  return current;
}

}  // namespace jna::curation
