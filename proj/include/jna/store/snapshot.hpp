#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "jna/domain/post.hpp"
#include "jna/rank/ordering.hpp"

namespace jna::store {

struct StoredPost {
  domain::Post post;
  std::string folded_message;
  rank::SortFields fields;
};

StoredPost make_stored(domain::Post p);

// Immutable view of the store at one point in time. Posts are ordered by
// (posted_at, post_id) ascending.
class Snapshot {
 public:
  Snapshot() = default;
  explicit Snapshot(std::vector<StoredPost> posts, std::uint64_t generation = 0);

  std::span<const StoredPost> posts() const noexcept { return posts_; }
  std::size_t size() const noexcept { return posts_.size(); }
  std::uint64_t generation() const noexcept { return generation_; }

  const StoredPost* find(std::string_view post_id) const;

  // Posts with posted_at in [since, until).
  std::span<const StoredPost> range(domain::Timestamp since, domain::Timestamp until) const;

  // New snapshot with `added` merged in. Ids in `added` must be new.
  std::shared_ptr<const Snapshot> with(std::vector<StoredPost> added) const;
  // New snapshot without posts whose posted_at < cutoff.
  std::shared_ptr<const Snapshot> without_before(domain::Timestamp cutoff) const;

 private:
  std::vector<StoredPost> posts_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::uint64_t generation_ = 0;
};

}  // namespace jna::store
