#pragma once

#include <iosfwd>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jna/domain/post.hpp"
#include "jna/store/query.hpp"
#include "jna/store/snapshot.hpp"

struct sqlite3;

namespace jna::store {

inline constexpr int kMinRetentionDays = 31;
inline constexpr int kDefaultRetentionDays = 45;

class StoreError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class InsertOutcome { Inserted, Duplicate };

struct StoreOptions {
  int retention_days = kDefaultRetentionDays;
};

// Durable post storage. One writer at a time (writes are serialized
// internally); readers work on immutable snapshots and never block on a
// write in progress. Each batch write is a single SQLite transaction:
// either every new post of the batch becomes visible or none does.
class PostStore {
 public:
  // `path` may be ":memory:" for a non-durable store.
  explicit PostStore(const std::string& path, StoreOptions options = {});
  ~PostStore();

  PostStore(const PostStore&) = delete;
  PostStore& operator=(const PostStore&) = delete;

  InsertOutcome insert_post(const domain::Post& p);
  std::vector<InsertOutcome> insert_batch(std::span<const domain::Post> posts);

  std::shared_ptr<const Snapshot> snapshot() const;
  std::optional<domain::Post> find(std::string_view post_id) const;
  std::size_t size() const;

  // Validates against the store's retention window, then runs the query on
  // the current snapshot.
  QueryResult query(const QuerySpec& q, domain::Timestamp now) const;

  // Removes posts with posted_at < now - retention_days. Rejects
  // retention_days below kMinRetentionDays with std::invalid_argument.
  std::size_t prune(int retention_days, domain::Timestamp now);

  // One record line per post, ordered by post_id.
  void export_records(std::ostream& out) const;
  // Loads export lines (retrieved_at required). Returns posts inserted.
  std::size_t import_records(std::istream& in);

  const StoreOptions& options() const noexcept { return options_; }

 private:
  void load();
  void publish(std::shared_ptr<const Snapshot> next);

  StoreOptions options_;
  std::unique_ptr<sqlite3, void (*)(sqlite3*)> db_;
  mutable std::mutex write_mutex_;
  mutable std::mutex snapshot_mutex_;
  std::shared_ptr<const Snapshot> snapshot_;
};

}  // namespace jna::store
