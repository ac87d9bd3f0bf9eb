#include "jna/store/post_store.hpp"

#include <sqlite3.h>

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <unordered_set>

#include "jna/domain/records.hpp"

namespace jna::store {

namespace {

constexpr const char* kSchema = R"sql(
CREATE TABLE IF NOT EXISTS posts (
  post_id      TEXT PRIMARY KEY,
  page_id      TEXT NOT NULL,
  posted_at    INTEGER NOT NULL,
  retrieved_at INTEGER NOT NULL,
  message      TEXT NOT NULL,
  link_url     TEXT,
  image_url    TEXT,
  permalink    TEXT NOT NULL,
  like_count    INTEGER NOT NULL,
  comment_count INTEGER NOT NULL,
  share_count   INTEGER NOT NULL,
  love_count    INTEGER NOT NULL,
  haha_count    INTEGER NOT NULL,
  wow_count     INTEGER NOT NULL,
  sad_count     INTEGER NOT NULL,
  angry_count   INTEGER NOT NULL
);
CREATE INDEX IF NOT EXISTS posts_posted_at ON posts(posted_at);
)sql";

class Statement {
 public:
  Statement(sqlite3* db, const char* sql) {
    if (sqlite3_prepare_v2(db, sql, -1, &stmt_, nullptr) != SQLITE_OK)
      throw StoreError(std::string("prepare failed: ") + sqlite3_errmsg(db));
  }
  ~Statement() { sqlite3_finalize(stmt_); }
  Statement(const Statement&) = delete;
  Statement& operator=(const Statement&) = delete;

  sqlite3_stmt* get() const noexcept { return stmt_; }

 private:
  sqlite3_stmt* stmt_ = nullptr;
};

void exec(sqlite3* db, const char* sql) {
  char* err = nullptr;
  if (sqlite3_exec(db, sql, nullptr, nullptr, &err) != SQLITE_OK) {
    std::string msg = err ? err : "unknown error";
    sqlite3_free(err);
    throw StoreError(msg);
  }
}

void bind_text(sqlite3_stmt* s, int col, const std::string& v) {
  sqlite3_bind_text(s, col, v.data(), static_cast<int>(v.size()), SQLITE_TRANSIENT);
}

void bind_optional(sqlite3_stmt* s, int col, const std::optional<std::string>& v) {
  if (v)
    bind_text(s, col, *v);
  else
    sqlite3_bind_null(s, col);
}

std::string column_text(sqlite3_stmt* s, int col) {
  const auto* p = sqlite3_column_text(s, col);
  return p ? std::string(reinterpret_cast<const char*>(p),
                         static_cast<std::size_t>(sqlite3_column_bytes(s, col)))
           : std::string();
}

std::optional<std::string> column_optional(sqlite3_stmt* s, int col) {
  if (sqlite3_column_type(s, col) == SQLITE_NULL) return std::nullopt;
  return column_text(s, col);
}

void check_counts(const domain::Post& p) {
  constexpr auto kMax = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  for (const auto r : domain::kReactions)
    if (p.engagement.get(r) > kMax) throw domain::CorruptPost("post " + p.post_id + ": count overflow");
}

// Rolls back unless committed.
class Transaction {
 public:
  explicit Transaction(sqlite3* db) : db_(db) { exec(db_, "BEGIN IMMEDIATE"); }
  ~Transaction() {
    if (!done_) sqlite3_exec(db_, "ROLLBACK", nullptr, nullptr, nullptr);
  }
  void commit() {
    exec(db_, "COMMIT");
    done_ = true;
  }

 private:
  sqlite3* db_;
  bool done_ = false;
};

}  // namespace

PostStore::PostStore(const std::string& path, StoreOptions options)
    : options_(options), db_(nullptr, [](sqlite3* d) { sqlite3_close(d); }) {
  if (options_.retention_days < kMinRetentionDays)
    throw std::invalid_argument("retention_days must be at least " +
                                std::to_string(kMinRetentionDays));
  sqlite3* raw = nullptr;
  const int rc = sqlite3_open_v2(path.c_str(), &raw,
                                 SQLITE_OPEN_READWRITE | SQLITE_OPEN_CREATE | SQLITE_OPEN_FULLMUTEX,
                                 nullptr);
  db_.reset(raw);
  if (rc != SQLITE_OK)
    throw StoreError("cannot open store '" + path + "': " + (raw ? sqlite3_errmsg(raw) : "oom"));
  exec(db_.get(), kSchema);
  load();
}

PostStore::~PostStore() = default;

void PostStore::load() {
  Statement s(db_.get(),
              "SELECT post_id, page_id, posted_at, retrieved_at, message, link_url, image_url, "
              "permalink, like_count, comment_count, share_count, love_count, haha_count, "
              "wow_count, sad_count, angry_count FROM posts");
  std::vector<StoredPost> posts;
  int rc = 0;
  while ((rc = sqlite3_step(s.get())) == SQLITE_ROW) {
    domain::Post p;
    p.post_id = column_text(s.get(), 0);
    p.page_id = column_text(s.get(), 1);
    p.posted_at = domain::from_unix(sqlite3_column_int64(s.get(), 2));
    p.retrieved_at = domain::from_unix(sqlite3_column_int64(s.get(), 3));
    p.message = column_text(s.get(), 4);
    p.link_url = column_optional(s.get(), 5);
    p.image_url = column_optional(s.get(), 6);
    p.permalink = column_text(s.get(), 7);
    int col = 8;
    for (const auto r : domain::kReactions)
      p.engagement.at(r) = static_cast<std::uint64_t>(sqlite3_column_int64(s.get(), col++));
    posts.push_back(make_stored(std::move(p)));
  }
  if (rc != SQLITE_DONE) throw StoreError(std::string("load failed: ") + sqlite3_errmsg(db_.get()));
  publish(std::make_shared<const Snapshot>(std::move(posts)));
}

void PostStore::publish(std::shared_ptr<const Snapshot> next) {
  std::lock_guard lock(snapshot_mutex_);
  snapshot_ = std::move(next);
}

std::shared_ptr<const Snapshot> PostStore::snapshot() const {
  std::lock_guard lock(snapshot_mutex_);
  return snapshot_;
}

InsertOutcome PostStore::insert_post(const domain::Post& p) {
  return insert_batch(std::span<const domain::Post>(&p, 1)).front();
}

std::vector<InsertOutcome> PostStore::insert_batch(std::span<const domain::Post> posts) {
  std::lock_guard writer(write_mutex_);
  const auto current = snapshot();

  std::vector<InsertOutcome> outcomes(posts.size(), InsertOutcome::Duplicate);
  std::vector<StoredPost> fresh;
  std::unordered_set<std::string> batch_ids;
  for (std::size_t i = 0; i < posts.size(); ++i) {
    const auto& p = posts[i];
    check_counts(p);
    if (current->find(p.post_id) || !batch_ids.insert(p.post_id).second) continue;
    fresh.push_back(make_stored(p));
    outcomes[i] = InsertOutcome::Inserted;
  }
  if (fresh.empty()) return outcomes;

  {
    Transaction tx(db_.get());
    Statement s(db_.get(),
                "INSERT INTO posts (post_id, page_id, posted_at, retrieved_at, message, link_url, "
                "image_url, permalink, like_count, comment_count, share_count, love_count, "
                "haha_count, wow_count, sad_count, angry_count) "
                "VALUES (?1, ?2, ?3, ?4, ?5, ?6, ?7, ?8, ?9, ?10, ?11, ?12, ?13, ?14, ?15, ?16)");
    for (const auto& sp : fresh) {
      const auto& p = sp.post;
      sqlite3_reset(s.get());
      sqlite3_clear_bindings(s.get());
      bind_text(s.get(), 1, p.post_id);
      bind_text(s.get(), 2, p.page_id);
      sqlite3_bind_int64(s.get(), 3, domain::to_unix(p.posted_at));
      sqlite3_bind_int64(s.get(), 4, domain::to_unix(p.retrieved_at));
      bind_text(s.get(), 5, p.message);
      bind_optional(s.get(), 6, p.link_url);
      bind_optional(s.get(), 7, p.image_url);
      bind_text(s.get(), 8, p.permalink);
      int col = 9;
      for (const auto r : domain::kReactions)
        sqlite3_bind_int64(s.get(), col++, static_cast<std::int64_t>(p.engagement.get(r)));
      if (sqlite3_step(s.get()) != SQLITE_DONE)
        throw StoreError("insert of " + p.post_id + " failed: " + sqlite3_errmsg(db_.get()));
    }
    tx.commit();
  }

  publish(current->with(std::move(fresh)));
  return outcomes;
}

std::optional<domain::Post> PostStore::find(std::string_view post_id) const {
  const auto snap = snapshot();
  if (const auto* p = snap->find(post_id)) return p->post;
  return std::nullopt;
}

std::size_t PostStore::size() const { return snapshot()->size(); }

QueryResult PostStore::query(const QuerySpec& q, domain::Timestamp now) const {
  validate(q, now, options_.retention_days);
  return run_query(*snapshot(), q);
}

std::size_t PostStore::prune(int retention_days, domain::Timestamp now) {
  if (retention_days < kMinRetentionDays)
    throw std::invalid_argument("retention_days must be at least " +
                                std::to_string(kMinRetentionDays));
  std::lock_guard writer(write_mutex_);
  const auto current = snapshot();
  const auto cutoff = now - domain::kDay * retention_days;

  std::size_t removed = 0;
  {
    Transaction tx(db_.get());
    Statement s(db_.get(), "DELETE FROM posts WHERE posted_at < ?1");
    sqlite3_bind_int64(s.get(), 1, domain::to_unix(cutoff));
    if (sqlite3_step(s.get()) != SQLITE_DONE)
      throw StoreError(std::string("prune failed: ") + sqlite3_errmsg(db_.get()));
    removed = static_cast<std::size_t>(sqlite3_changes(db_.get()));
    tx.commit();
  }
  if (removed > 0) publish(current->without_before(cutoff));
  return removed;
}

void PostStore::export_records(std::ostream& out) const {
  const auto snap = snapshot();
  std::vector<const domain::Post*> posts;
  posts.reserve(snap->size());
  for (const auto& p : snap->posts()) posts.push_back(&p.post);
  std::sort(posts.begin(), posts.end(),
            [](const auto* a, const auto* b) { return a->post_id < b->post_id; });
  for (const auto* p : posts) out << domain::serialize_record(domain::to_record(*p)) << '\n';
}

std::size_t PostStore::import_records(std::istream& in) {
  std::vector<domain::Post> posts;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    domain::FeedRecord r;
    try {
      r = domain::parse_record(line);
    } catch (const domain::RecordError& e) {
      throw domain::RecordError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!r.retrieved_at)
      throw domain::RecordError("line " + std::to_string(line_no) + ": retrieved_at is required");
    posts.push_back(domain::to_post(r, *r.retrieved_at));
  }
  const auto outcomes = insert_batch(posts);
  return static_cast<std::size_t>(
      std::count(outcomes.begin(), outcomes.end(), InsertOutcome::Inserted));
}

}  // namespace jna::store
