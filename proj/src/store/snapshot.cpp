#include "jna/store/snapshot.hpp"

#include <algorithm>

#include "jna/store/text.hpp"

namespace jna::store {

namespace {

bool by_time_then_id(const StoredPost& a, const StoredPost& b) {
  if (a.post.posted_at != b.post.posted_at) return a.post.posted_at < b.post.posted_at;
  return a.post.post_id < b.post.post_id;
}

}  // namespace

StoredPost make_stored(domain::Post p) {
  domain::validate(p);
  StoredPost s;
  s.folded_message = fold_case(p.message);
  s.fields = rank::sort_fields(p);
  s.post = std::move(p);
  return s;
}

Snapshot::Snapshot(std::vector<StoredPost> posts, std::uint64_t generation)
    : posts_(std::move(posts)), generation_(generation) {
  std::sort(posts_.begin(), posts_.end(), by_time_then_id);
  by_id_.reserve(posts_.size());
  for (std::size_t i = 0; i < posts_.size(); ++i) by_id_.emplace(posts_[i].post.post_id, i);
}

const StoredPost* Snapshot::find(std::string_view post_id) const {
  const auto it = by_id_.find(std::string(post_id));
  return it == by_id_.end() ? nullptr : &posts_[it->second];
}

std::span<const StoredPost> Snapshot::range(domain::Timestamp since,
                                            domain::Timestamp until) const {
  if (until <= since) return {};
  const auto lo = std::lower_bound(posts_.begin(), posts_.end(), since,
                                   [](const StoredPost& p, domain::Timestamp t) {
                                     return p.post.posted_at < t;
                                   });
  const auto hi = std::lower_bound(lo, posts_.end(), until,
                                   [](const StoredPost& p, domain::Timestamp t) {
                                     return p.post.posted_at < t;
                                   });
  return {lo, hi};
}

std::shared_ptr<const Snapshot> Snapshot::with(std::vector<StoredPost> added) const {
  std::sort(added.begin(), added.end(), by_time_then_id);
  std::vector<StoredPost> merged;
  merged.reserve(posts_.size() + added.size());
  std::merge(posts_.begin(), posts_.end(), std::make_move_iterator(added.begin()),
             std::make_move_iterator(added.end()), std::back_inserter(merged), by_time_then_id);
  return std::make_shared<const Snapshot>(std::move(merged), generation_ + 1);
}

std::shared_ptr<const Snapshot> Snapshot::without_before(domain::Timestamp cutoff) const {
  std::vector<StoredPost> kept;
  kept.reserve(posts_.size());
  for (const auto& p : posts_)
    if (p.post.posted_at >= cutoff) kept.push_back(p);
  return std::make_shared<const Snapshot>(std::move(kept), generation_ + 1);
}

}  // namespace jna::store
