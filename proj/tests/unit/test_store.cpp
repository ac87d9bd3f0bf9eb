#include <gtest/gtest.h>
#include <sqlite3.h>

#include <filesystem>
#include <random>
#include <set>
#include <sstream>

#include "jna/domain/records.hpp"
#include "jna/store/post_store.hpp"
#include "jna/store/text.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace jna;
using domain::Seconds;
using domain::Timestamp;
using store::PostStore;
using store::QuerySpec;

namespace {

std::vector<std::string> ids(const std::vector<domain::Post>& posts) {
  std::vector<std::string> out;
  for (const auto& p : posts) out.push_back(p.post_id);
  return out;
}

QuerySpec full_range() {
  QuerySpec q;
  q.since = testkit::corpus_now() - domain::kDay * 45;
  q.until = testkit::corpus_now() + Seconds{1};
  return q;
}

class TempDir {
 public:
  TempDir() {
    path_ = std::filesystem::temp_directory_path() /
            ("jna_store_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path file(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Text, FoldCase) {
  EXPECT_EQ(store::fold_case("ELECTION"), "election");
  EXPECT_EQ(store::fold_case("straße"), "strasse");
  EXPECT_EQ(store::fold_case("STRASSE"), "strasse");
  EXPECT_EQ(store::fold_case("ВЫБОРЫ"), "выборы");
  EXPECT_EQ(store::fold_case("Élection"), "élection");
  EXPECT_EQ(store::fold_case("\xff"), "\xEF\xBF\xBD");
}

TEST(Text, FoldMatchesNaiveOnCorpus) {
  for (const auto& p : testkit::synthetic_posts())
    ASSERT_EQ(store::fold_case(p.message), testkit::naive_fold(p.message)) << p.message;
}

TEST(Text, Excerpt) {
  EXPECT_EQ(store::excerpt("short", 280), "short");
  EXPECT_EQ(store::excerpt("abcdef", 4), "abc\xE2\x80\xA6");
  EXPECT_EQ(store::excerpt("ÜÜÜÜ", 4), "ÜÜÜÜ");
  EXPECT_EQ(store::excerpt("ÜÜÜÜÜ", 4), "ÜÜÜ\xE2\x80\xA6");
  EXPECT_EQ(store::code_point_count(store::excerpt(std::string(1000, 'x'), 280)), 280u);
}

TEST(PostStore, InsertThenFindRoundTrip) {
  PostStore s(":memory:");
  const auto posts = testkit::synthetic_posts({5});
  EXPECT_EQ(s.insert_post(posts[0]), store::InsertOutcome::Inserted);
  EXPECT_EQ(s.find(posts[0].post_id), posts[0]);
  EXPECT_FALSE(s.find("missing"));
}

TEST(PostStore, DuplicateInsertIsNoOp) {
  PostStore s(":memory:");
  auto p = testkit::synthetic_posts({1})[0];
  ASSERT_EQ(s.insert_post(p), store::InsertOutcome::Inserted);
  const auto gen = s.snapshot()->generation();
  auto changed = p;
  changed.engagement.like += 1000;
  EXPECT_EQ(s.insert_post(changed), store::InsertOutcome::Duplicate);
  EXPECT_EQ(s.find(p.post_id), p);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.snapshot()->generation(), gen);
}

TEST(PostStore, BatchDeduplicatesWithinBatch) {
  PostStore s(":memory:");
  const auto posts = testkit::synthetic_posts({3});
  std::vector<domain::Post> batch{posts[0], posts[1], posts[0], posts[2]};
  const auto out = s.insert_batch(batch);
  using store::InsertOutcome;
  EXPECT_EQ(out, (std::vector<InsertOutcome>{InsertOutcome::Inserted, InsertOutcome::Inserted,
                                             InsertOutcome::Duplicate, InsertOutcome::Inserted}));
  EXPECT_EQ(s.size(), 3u);
}

TEST(PostStore, RejectsCorruptPost) {
  PostStore s(":memory:");
  auto p = testkit::synthetic_posts({1})[0];
  p.retrieved_at = p.posted_at - Seconds{1};
  EXPECT_THROW(s.insert_post(p), domain::CorruptPost);
  EXPECT_EQ(s.size(), 0u);
}

TEST(PostStore, BulkLoadCount) {
  PostStore s(":memory:");
  const auto posts = testkit::synthetic_posts();
  s.insert_batch(posts);
  EXPECT_EQ(s.size(), 1000u);
  auto q = full_range();
  q.limit = 1;
  EXPECT_EQ(s.query(q, testkit::corpus_now()).total_matching, 1000u);
}

TEST(PostStore, EmptyStoreQuery) {
  PostStore s(":memory:");
  const auto r = s.query(full_range(), testkit::corpus_now());
  EXPECT_TRUE(r.posts.empty());
  EXPECT_EQ(r.total_matching, 0u);
}

TEST(PostStore, EmptyInterval) {
  PostStore s(":memory:");
  s.insert_batch(testkit::synthetic_posts());
  auto q = full_range();
  q.since = q.until = testkit::corpus_now() - domain::kDay;
  const auto r = s.query(q, testkit::corpus_now());
  EXPECT_TRUE(r.posts.empty());
  EXPECT_EQ(r.total_matching, 0u);
}

TEST(PostStore, KeywordMatchesOracleForAllSortKeys) {
  PostStore s(":memory:");
  const auto corpus = testkit::synthetic_posts();
  s.insert_batch(corpus);
  for (const auto& key : rank::all_sort_keys()) {
    for (const auto dir : {rank::Direction::Descending, rank::Direction::Ascending}) {
      auto q = full_range();
      q.keyword = "election";
      q.sort = key;
      q.direction = dir;
      q.limit = 100;
      const auto got = s.query(q, testkit::corpus_now());
      const auto want = testkit::naive_query(corpus, q);
      ASSERT_GT(want.total, 0u);
      EXPECT_EQ(got.total_matching, want.total) << rank::sort_token(key);
      EXPECT_EQ(ids(got.posts), ids(want.posts)) << rank::sort_token(key);
    }
  }
}

TEST(PostStore, KeywordIsCaseInsensitive) {
  PostStore s(":memory:");
  s.insert_batch(testkit::synthetic_posts());
  for (const auto& [a, b] : std::vector<std::pair<std::string, std::string>>{
           {"ELECTION", "election"}, {"Straße", "STRASSE"}, {"выборы", "ВЫБОРЫ"}, {"über", "ÜBER"}}) {
    auto qa = full_range();
    auto qb = full_range();
    qa.keyword = a;
    qb.keyword = b;
    qa.limit = qb.limit = 100;
    const auto ra = s.query(qa, testkit::corpus_now());
    const auto rb = s.query(qb, testkit::corpus_now());
    EXPECT_GT(ra.total_matching, 0u) << a;
    EXPECT_EQ(ra.total_matching, rb.total_matching) << a;
    EXPECT_EQ(ids(ra.posts), ids(rb.posts)) << a;
  }
}

TEST(PostStore, PageFilter) {
  PostStore s(":memory:");
  const auto corpus = testkit::synthetic_posts();
  s.insert_batch(corpus);
  auto q = full_range();
  q.page_ids = std::vector<std::string>{"page03", "page07"};
  q.limit = 100;
  const auto r = s.query(q, testkit::corpus_now());
  const auto want = testkit::naive_query(corpus, q);
  EXPECT_EQ(r.total_matching, want.total);
  for (const auto& p : r.posts) EXPECT_TRUE(p.page_id == "page03" || p.page_id == "page07");
  q.page_ids = std::vector<std::string>{};
  EXPECT_EQ(s.query(q, testkit::corpus_now()).total_matching, 0u);
}

TEST(PostStore, PaginationConcatenationIsComplete) {
  PostStore s(":memory:");
  const auto corpus = testkit::synthetic_posts();
  s.insert_batch(corpus);
  for (const auto& key : {rank::SortKey::newest(), rank::SortKey::by({domain::MetricBase::All, true}),
                          rank::SortKey::by({domain::MetricBase::Haha, false})}) {
    auto q = full_range();
    q.sort = key;
    q.limit = 37;
    std::vector<std::string> pages;
    std::size_t total = 0;
    for (q.offset = 0;; q.offset += q.limit) {
      const auto r = s.query(q, testkit::corpus_now());
      total = r.total_matching;
      if (r.posts.empty()) break;
      for (const auto& p : r.posts) pages.push_back(p.post_id);
    }
    auto whole = q;
    whole.offset = 0;
    whole.limit = corpus.size();
    const auto want = ids(testkit::naive_query(corpus, whole).posts);
    EXPECT_EQ(pages.size(), total);
    EXPECT_EQ(pages, want);
    EXPECT_EQ(std::set<std::string>(pages.begin(), pages.end()).size(), pages.size());
  }
}

TEST(PostStore, QueryValidation) {
  PostStore s(":memory:");
  const auto now = testkit::corpus_now();
  auto expect_field = [&](const QuerySpec& q, const std::string& field) {
    try {
      s.query(q, now);
      ADD_FAILURE() << "expected rejection of " << field;
    } catch (const store::QueryError& e) {
      EXPECT_EQ(e.field(), field);
    }
  };
  auto q = full_range();
  q.since = q.until + Seconds{1};
  expect_field(q, "since");
  q = full_range();
  q.since = now - domain::kDay * 46;
  expect_field(q, "since");
  q = full_range();
  q.limit = 0;
  expect_field(q, "limit");
  q.limit = 101;
  expect_field(q, "limit");
  q = full_range();
  q.page_ids = std::vector<std::string>{""};
  expect_field(q, "page_ids");
}

TEST(PostStore, PruneNothingOlder) {
  PostStore s(":memory:");
  const auto now = testkit::corpus_now();
  s.insert_batch(testkit::synthetic_posts({50, 3, 10, 20}));
  EXPECT_EQ(s.prune(31, now), 0u);
  EXPECT_EQ(s.size(), 50u);
}

TEST(PostStore, PruneStraddlingCutoff) {
  PostStore s(":memory:");
  const auto now = testkit::corpus_now();
  const auto cutoff = now - domain::kDay * 31;
  // Offsets from the cutoff, in seconds; negative ones are older.
  const std::int64_t offsets[] = {-86400, -3600, -60, -1, 0, 1, 60, 3600, 86400, 5 * 86400};
  std::vector<domain::Post> posts;
  for (std::size_t i = 0; i < std::size(offsets); ++i) {
    domain::Post p;
    p.post_id = "edge" + std::to_string(i);
    p.page_id = "page01";
    p.posted_at = cutoff + Seconds{offsets[i]};
    p.retrieved_at = p.posted_at + Seconds{30};
    p.permalink = "x";
    posts.push_back(p);
  }
  s.insert_batch(posts);
  EXPECT_EQ(s.prune(31, now), 4u);
  EXPECT_EQ(s.size(), 6u);
  EXPECT_FALSE(s.find("edge3"));
  EXPECT_TRUE(s.find("edge4"));
}

TEST(PostStore, PruneBelowMinimumRejected) {
  PostStore s(":memory:");
  EXPECT_THROW(s.prune(30, testkit::corpus_now()), std::invalid_argument);
  EXPECT_THROW(PostStore(":memory:", {30}), std::invalid_argument);
}

TEST(PostStore, PersistsAcrossReopen) {
  TempDir dir;
  const auto path = dir.file("posts.db").string();
  const auto corpus = testkit::synthetic_posts({200});
  std::string before;
  {
    PostStore s(path);
    s.insert_batch(corpus);
    std::ostringstream out;
    s.export_records(out);
    before = out.str();
  }
  PostStore reopened(path);
  EXPECT_EQ(reopened.size(), 200u);
  std::ostringstream out;
  reopened.export_records(out);
  EXPECT_EQ(out.str(), before);
  for (const auto& p : corpus) EXPECT_EQ(reopened.find(p.post_id), p);
}

TEST(PostStore, ExportImportRoundTrip) {
  PostStore a(":memory:");
  a.insert_batch(testkit::synthetic_posts({300}));
  std::stringstream buf;
  a.export_records(buf);
  PostStore b(":memory:");
  EXPECT_EQ(b.import_records(buf), 300u);
  std::ostringstream again_a, again_b;
  a.export_records(again_a);
  b.export_records(again_b);
  EXPECT_EQ(again_a.str(), again_b.str());
}

TEST(PostStore, FailedTransactionLeavesNoPartialBatch) {
  TempDir dir;
  const auto path = dir.file("abort.db").string();
  const auto corpus = testkit::synthetic_posts({20});
  {
    PostStore s(path);
    s.insert_batch(std::vector<domain::Post>(corpus.begin(), corpus.begin() + 5));
  }
  {
    // Make the 3rd insert of the next batch fail inside the transaction.
    sqlite3* db = nullptr;
    ASSERT_EQ(sqlite3_open(path.c_str(), &db), SQLITE_OK);
    const std::string sql = "CREATE TRIGGER fail_one BEFORE INSERT ON posts WHEN NEW.post_id = '" +
                            corpus[7].post_id + "' BEGIN SELECT RAISE(ABORT, 'disk full'); END;";
    ASSERT_EQ(sqlite3_exec(db, sql.c_str(), nullptr, nullptr, nullptr), SQLITE_OK);
    sqlite3_close(db);
  }
  PostStore s(path);
  EXPECT_THROW(s.insert_batch(std::vector<domain::Post>(corpus.begin() + 5, corpus.end())),
               store::StoreError);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_FALSE(s.find(corpus[5].post_id));
  PostStore reopened(path);
  EXPECT_EQ(reopened.size(), 5u);
}

TEST(PostStore, ReadersKeepTheirSnapshot) {
  PostStore s(":memory:");
  const auto corpus = testkit::synthetic_posts({10});
  s.insert_batch(std::vector<domain::Post>(corpus.begin(), corpus.begin() + 4));
  const auto snap = s.snapshot();
  s.insert_batch(std::vector<domain::Post>(corpus.begin() + 4, corpus.end()));
  EXPECT_EQ(snap->size(), 4u);
  EXPECT_EQ(s.snapshot()->size(), 10u);
  EXPECT_GT(s.snapshot()->generation(), snap->generation());
}
