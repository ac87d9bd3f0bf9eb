#include "synthetic.hpp"

#include <cstdio>
#include <random>

namespace jna::testkit {

using domain::Timestamp;

namespace {

const std::vector<std::string> kWords = {
    "election", "Election", "ELECTION", "vote",    "midterms", "Élection", "élection",
    "ÉLECTION", "straße",   "STRASSE",  "выборы",  "ВЫБОРЫ",   "senate",   "ballot",
    "Ñandú",    "ñandú",    "borders",  "economy", "Über",     "über",     "ÜBER",
    "breaking", "news",     "watch",    "shocking", "truth",   "caravan",  "poll"};

}  // namespace

Timestamp corpus_now() { return *domain::parse_iso8601("2018-11-06T23:30:00Z"); }

std::vector<std::string> synthetic_page_ids(std::size_t pages) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < pages; ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "page%02zu", i + 1);
    ids.emplace_back(buf);
  }
  return ids;
}

std::vector<domain::Post> synthetic_posts(const CorpusShape& shape) {
  std::mt19937_64 rng(shape.seed);
  auto uniform = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const auto pages = synthetic_page_ids(shape.pages);
  const Timestamp cutoff = *domain::parse_iso8601("2018-11-06T22:00:00Z");
  const auto window_start = cutoff - domain::kDay;
  const auto oldest = corpus_now() - domain::kDay * shape.max_days_back;

  std::vector<domain::Post> posts;
  posts.reserve(shape.posts);
  for (std::size_t i = 0; i < shape.posts; ++i) {
    domain::Post p;
    p.page_id = pages[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(pages.size()) - 1))];
    char id[48];
    std::snprintf(id, sizeof id, "%s_%06zu", p.page_id.c_str(), i);
    p.post_id = id;

    if (i < shape.in_window)
      p.posted_at = window_start + domain::Seconds{uniform(0, 86399)};
    else
      p.posted_at = oldest + domain::Seconds{uniform(0, domain::to_unix(corpus_now()) - domain::to_unix(oldest) - 1)};

    const auto age_roll = uniform(0, 99);
    std::int64_t age = 0;
    if (age_roll < 5)
      age = 0;
    else if (age_roll < 90)
      age = uniform(1, 3600);
    else
      age = uniform(3601, 3 * 86400);
    p.retrieved_at = p.posted_at + domain::Seconds{age};

    const auto words = uniform(0, 8);
    for (std::int64_t w = 0; w < words; ++w) {
      if (!p.message.empty()) p.message += ' ';
      p.message += kWords[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(kWords.size()) - 1))];
    }
    if (uniform(0, 9) < 7) p.image_url = "https://img.example/" + p.post_id + ".jpg";
    if (uniform(0, 9) < 8) p.link_url = "https://" + p.page_id + ".example/story/" + std::to_string(i);
    p.permalink = "https://facebook.example/" + p.page_id + "/posts/" + p.post_id;

    const auto scale = uniform(0, 3) == 0 ? 5000 : 300;
    for (const auto r : domain::kReactions) p.engagement.at(r) = static_cast<std::uint64_t>(uniform(0, scale));
    if (uniform(0, 19) == 0) p.engagement = {};

    // Ties: copy engagement and age (and sometimes posted_at) from an earlier post.
    if (i > 10 && uniform(0, 9) == 0) {
      const auto& src = posts[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(i) - 1))];
      p.engagement = src.engagement;
      if (uniform(0, 1) == 0) p.posted_at = src.posted_at;
      p.retrieved_at = p.posted_at + (src.retrieved_at - src.posted_at);
    }
    posts.push_back(std::move(p));
  }
  return posts;
}

}  // namespace jna::testkit
