#include "oracles.hpp"

#include <algorithm>

namespace jna::testkit {

using domain::MetricBase;

std::uint64_t naive_total(const domain::Post& p) {
  const auto& e = p.engagement;
  std::uint64_t sum = 0;
  sum += e.like;
  sum += e.comment;
  sum += e.share;
  sum += e.love;
  sum += e.haha;
  sum += e.wow;
  sum += e.sad;
  sum += e.angry;
  return sum;
}

std::uint64_t naive_count(const domain::Post& p, MetricBase base) {
  const auto& e = p.engagement;
  switch (base) {
    case MetricBase::Like: return e.like;
    case MetricBase::Comment: return e.comment;
    case MetricBase::Share: return e.share;
    case MetricBase::Love: return e.love;
    case MetricBase::Haha: return e.haha;
    case MetricBase::Wow: return e.wow;
    case MetricBase::Sad: return e.sad;
    case MetricBase::Angry: return e.angry;
    case MetricBase::All: return naive_total(p);
  }
  return 0;
}

std::int64_t naive_age(const domain::Post& p) {
  const auto d = domain::to_unix(p.retrieved_at) - domain::to_unix(p.posted_at);
  return d < 1 ? 1 : d;
}

long double naive_metric(const domain::Post& p, domain::MetricKey key) {
  const auto c = static_cast<long double>(naive_count(p, key.base));
  return key.age_adjusted ? c / static_cast<long double>(naive_age(p)) : c;
}

std::string naive_fold(const std::string& s) {
  std::string out;
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      out += static_cast<char>(b0 >= 'A' && b0 <= 'Z' ? b0 + 32 : b0);
      ++i;
      continue;
    }
    // Two-byte sequences only in this alphabet.
    const auto b1 = static_cast<unsigned char>(s[i + 1]);
    unsigned cp = ((b0 & 0x1Fu) << 6) | (b1 & 0x3Fu);
    i += 2;
    if (cp == 0xDF) {
      out += "ss";
      continue;
    }
    if ((cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) || (cp >= 0x410 && cp <= 0x42F)) cp += 0x20;
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

bool naive_before(const domain::Post& a, const domain::Post& b, rank::SortKey key,
                  rank::Direction dir) {
  const bool flip = dir == rank::Direction::Ascending;
  long double va = 0, vb = 0;
  switch (key.kind) {
    case rank::SortKind::Newest:
      va = static_cast<long double>(domain::to_unix(a.posted_at));
      vb = static_cast<long double>(domain::to_unix(b.posted_at));
      break;
    case rank::SortKind::Oldest:
      va = -static_cast<long double>(domain::to_unix(a.posted_at));
      vb = -static_cast<long double>(domain::to_unix(b.posted_at));
      break;
    case rank::SortKind::Metric:
      va = naive_metric(a, key.metric);
      vb = naive_metric(b, key.metric);
      break;
  }
  if (va != vb) return flip ? va < vb : va > vb;
  if (a.posted_at != b.posted_at) return a.posted_at > b.posted_at;
  return a.post_id < b.post_id;
}

NaiveResult naive_query(const std::vector<domain::Post>& corpus, const store::QuerySpec& q) {
  std::vector<domain::Post> hits;
  const auto needle = q.keyword ? naive_fold(*q.keyword) : std::string();
  for (const auto& p : corpus) {
    if (p.posted_at < q.since || !(p.posted_at < q.until)) continue;
    if (q.page_ids && std::find(q.page_ids->begin(), q.page_ids->end(), p.page_id) == q.page_ids->end())
      continue;
    if (!needle.empty() && naive_fold(p.message).find(needle) == std::string::npos) continue;
    hits.push_back(p);
  }
  std::sort(hits.begin(), hits.end(), [&](const auto& a, const auto& b) {
    return naive_before(a, b, q.sort, q.direction);
  });
  NaiveResult r;
  r.total = hits.size();
  for (std::size_t i = q.offset; i < hits.size() && i < q.offset + q.limit; ++i)
    r.posts.push_back(hits[i]);
  return r;
}

std::vector<domain::Post> naive_sorted_window(const std::vector<domain::Post>& corpus,
                                              domain::Timestamp start, domain::Timestamp end,
                                              rank::SortKey key) {
  std::vector<domain::Post> hits;
  for (const auto& p : corpus)
    if (p.posted_at >= start && p.posted_at < end) hits.push_back(p);
  std::sort(hits.begin(), hits.end(), [&](const auto& a, const auto& b) {
    return naive_before(a, b, key, rank::Direction::Descending);
  });
  return hits;
}

}  // namespace jna::testkit
