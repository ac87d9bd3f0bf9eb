#include <gtest/gtest.h>
#include <omp.h>

#include <random>

#include "jna/store/kernels.hpp"
#include "jna/store/query.hpp"
#include "jna/store/snapshot.hpp"
#include "jna/store/text.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace jna;
using store::ExecPolicy;

namespace {

// Large enough that the parallel paths actually split the work.
const store::Snapshot& big_snapshot() {
  static const store::Snapshot snap = [] {
    std::vector<store::StoredPost> stored;
    for (auto& p : testkit::synthetic_posts({20000, 40, 6000, 44, 7}))
      stored.push_back(store::make_stored(std::move(p)));
    return store::Snapshot(std::move(stored));
  }();
  return snap;
}

class Kernels : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

std::vector<store::ScanFilter> filters() {
  const auto now = testkit::corpus_now();
  std::vector<store::ScanFilter> out;
  out.push_back({now - domain::kDay * 45, now + domain::Seconds{1}, "", {}});
  out.push_back({now - domain::kDay * 2, now, store::fold_case("ELECTION"), {}});
  out.push_back({now - domain::kDay * 30, now - domain::kDay * 3, "", {"page02", "page17", "page33"}});
  out.push_back({now - domain::kDay * 45, now, store::fold_case("Straße"), {"page05"}});
  out.push_back({now, now, "", {}});
  out.push_back({now - domain::kDay * 45, now, "no such word", {}});
  return out;
}

}  // namespace

TEST_F(Kernels, ParallelMatchEqualsSerial) {
  const auto posts = big_snapshot().posts();
  for (const auto& f : filters()) {
    const auto par = store::parallel::match(posts, f);
    const auto ser = store::serial::match(posts, f);
    EXPECT_EQ(par, ser);
    for (const auto i : ser) ASSERT_TRUE(store::matches(posts[i], f));
  }
}

TEST_F(Kernels, ParallelOrderPrefixEqualsSerial) {
  const auto posts = big_snapshot().posts();
  const auto all = store::serial::match(posts, filters()[0]);
  ASSERT_GT(all.size(), 10000u);
  for (const auto& key : rank::all_sort_keys()) {
    for (const auto dir : {rank::Direction::Descending, rank::Direction::Ascending}) {
      for (const std::size_t prefix : {std::size_t{1}, std::size_t{100}, std::size_t{256},
                                       std::size_t{5000}, all.size() + 5}) {
        auto par = all;
        auto ser = all;
        store::parallel::order_prefix(posts, par, key, dir, prefix);
        store::serial::order_prefix(posts, ser, key, dir, prefix);
        ASSERT_EQ(par, ser) << rank::sort_token(key) << " prefix " << prefix;
        ASSERT_EQ(par.size(), std::min(prefix, all.size()));
      }
    }
  }
}

TEST_F(Kernels, RunQueryPoliciesAgreeWithOracle) {
  const auto& snap = big_snapshot();
  std::vector<domain::Post> corpus;
  for (const auto& sp : snap.posts()) corpus.push_back(sp.post);
  std::mt19937 rng(99);
  const auto keys = rank::all_sort_keys();
  for (int round = 0; round < 40; ++round) {
    store::QuerySpec q;
    q.since = testkit::corpus_now() - domain::kDay * std::uniform_int_distribution<int>(1, 45)(rng);
    q.until = testkit::corpus_now() + domain::Seconds{1};
    q.sort = keys[static_cast<std::size_t>(round) % keys.size()];
    q.direction = round % 3 == 0 ? rank::Direction::Ascending : rank::Direction::Descending;
    if (round % 2) q.keyword = "élection";
    q.offset = std::uniform_int_distribution<std::size_t>(0, 3000)(rng);
    q.limit = 100;
    const auto par = store::run_query(snap, q, ExecPolicy::Parallel);
    const auto ser = store::run_query(snap, q, ExecPolicy::Serial);
    const auto want = testkit::naive_query(corpus, q);
    ASSERT_EQ(par.total_matching, want.total);
    ASSERT_EQ(ser.total_matching, want.total);
    ASSERT_EQ(par.posts, want.posts) << rank::sort_token(q.sort);
    ASSERT_EQ(ser.posts, want.posts) << rank::sort_token(q.sort);
  }
}

TEST(KernelsSingleThread, SmallInputsUseTheSameResults) {
  std::vector<store::StoredPost> stored;
  for (auto& p : testkit::synthetic_posts({50})) stored.push_back(store::make_stored(std::move(p)));
  const store::Snapshot snap(std::move(stored));
  const auto f = filters()[0];
  auto a = store::match(snap.posts(), f, ExecPolicy::Parallel);
  auto b = store::match(snap.posts(), f, ExecPolicy::Serial);
  EXPECT_EQ(a, b);
  store::order_prefix(snap.posts(), a, rank::SortKey::oldest(), rank::Direction::Descending, 7,
                      ExecPolicy::Parallel);
  store::order_prefix(snap.posts(), b, rank::SortKey::oldest(), rank::Direction::Descending, 7,
                      ExecPolicy::Serial);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.size(), 7u);
}

TEST(Snapshot, RangeIsHalfOpen) {
  std::vector<store::StoredPost> stored;
  for (auto& p : testkit::synthetic_posts({300})) stored.push_back(store::make_stored(std::move(p)));
  const store::Snapshot snap(std::move(stored));
  const auto posts = snap.posts();
  for (std::size_t i = 1; i < posts.size(); ++i)
    ASSERT_LE(posts[i - 1].post.posted_at, posts[i].post.posted_at);
  const auto t = posts[100].post.posted_at;
  for (const auto& sp : snap.range(t, t + domain::kHour)) {
    EXPECT_GE(sp.post.posted_at, t);
    EXPECT_LT(sp.post.posted_at, t + domain::kHour);
  }
  EXPECT_TRUE(snap.range(t, t).empty());
  EXPECT_EQ(snap.find(posts[5].post.post_id), &posts[5]);
}
