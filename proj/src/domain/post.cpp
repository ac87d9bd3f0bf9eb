#include "jna/domain/post.hpp"

namespace jna::domain {

void validate(const Post& p) {
  if (p.post_id.empty()) throw CorruptPost("post_id is empty");
  if (p.page_id.empty()) throw CorruptPost("post " + p.post_id + ": page_id is empty");
  if (p.permalink.empty()) throw CorruptPost("post " + p.post_id + ": permalink is empty");
  if (p.retrieved_at < p.posted_at)
    throw CorruptPost("post " + p.post_id + ": retrieved_at precedes posted_at");
}

std::int64_t clamped_age(Timestamp posted_at, Timestamp retrieved_at) {
  const auto age = (retrieved_at - posted_at).count();
  if (age < 0) throw CorruptPost("retrieved_at precedes posted_at");
  return age < 1 ? 1 : age;
}

std::int64_t post_age_seconds(const Post& p) {
  if (p.retrieved_at < p.posted_at)
    throw CorruptPost("post " + p.post_id + ": retrieved_at precedes posted_at");
  return clamped_age(p.posted_at, p.retrieved_at);
}

Ratio metric_value(const Post& p, MetricKey key) {
  const auto count = count_for(p.engagement, key.base);
  if (!key.age_adjusted) return Ratio{count, 1};
  return Ratio{count, static_cast<std::uint64_t>(post_age_seconds(p))};
}

}  // namespace jna::domain
