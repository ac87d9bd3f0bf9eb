// Serial reference vs OpenMP kernels on a synthetic store.
//
//   bench_kernels --benchmark_filter=Match
//   OMP_NUM_THREADS=8 bench_kernels

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "jna/rank/top_k.hpp"
#include "jna/store/kernels.hpp"
#include "jna/store/query.hpp"
#include "jna/store/snapshot.hpp"
#include "jna/store/text.hpp"

using namespace jna;
using store::ExecPolicy;

namespace {

const domain::Timestamp kNow = *domain::parse_iso8601("2018-11-06T23:30:00Z");

const store::Snapshot& corpus(std::size_t n) {
  static std::map<std::size_t, store::Snapshot> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  static const char* kWords[] = {"election", "Vote", "BALLOT", "senate", "straße", "выборы",
                                 "news", "watch", "truth", "caravan", "economy", "poll"};
  std::mt19937_64 rng(n);
  std::vector<store::StoredPost> posts;
  posts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    domain::Post p;
    p.page_id = "page" + std::to_string(rng() % 50);
    p.post_id = p.page_id + "_" + std::to_string(i);
    p.posted_at = kNow - domain::Seconds{static_cast<std::int64_t>(rng() % (45 * 86400))};
    p.retrieved_at = p.posted_at + domain::Seconds{static_cast<std::int64_t>(rng() % 3600)};
    for (int w = 0, words = static_cast<int>(rng() % 12); w < words; ++w)
      p.message += std::string(kWords[rng() % std::size(kWords)]) + " ";
    p.permalink = "https://facebook.example/" + p.post_id;
    for (const auto r : domain::kReactions) p.engagement.at(r) = rng() % 2000;
    posts.push_back(store::make_stored(std::move(p)));
  }
  return cache.emplace(n, store::Snapshot(std::move(posts))).first->second;
}

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(1) ? ExecPolicy::Parallel : ExecPolicy::Serial;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(1) ? "parallel/" + std::to_string(omp_get_max_threads()) + "t" : "serial");
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}

void BM_Match(benchmark::State& state) {
  const auto& snap = corpus(static_cast<std::size_t>(state.range(0)));
  const store::ScanFilter f{kNow - domain::kDay * 45, kNow, store::fold_case("ELECTION"), {}};
  for (auto _ : state) benchmark::DoNotOptimize(store::match(snap.posts(), f, policy_of(state)));
  label(state);
}

void BM_OrderPrefix(benchmark::State& state) {
  const auto& snap = corpus(static_cast<std::size_t>(state.range(0)));
  const store::ScanFilter all{kNow - domain::kDay * 45, kNow + domain::Seconds{1}, "", {}};
  const auto idx = store::serial::match(snap.posts(), all);
  const auto key = rank::SortKey::by({domain::MetricBase::All, true});
  for (auto _ : state) {
    auto work = idx;
    store::order_prefix(snap.posts(), work, key, rank::Direction::Descending, 100, policy_of(state));
    benchmark::DoNotOptimize(work);
  }
  label(state);
}

void BM_Query(benchmark::State& state) {
  const auto& snap = corpus(static_cast<std::size_t>(state.range(0)));
  store::QuerySpec q;
  q.since = kNow - domain::kDay * 30;
  q.until = kNow;
  q.keyword = "vote";
  q.sort = rank::SortKey::by({domain::MetricBase::Angry, false});
  q.limit = 100;
  for (auto _ : state) benchmark::DoNotOptimize(store::run_query(snap, q, policy_of(state)));
  label(state);
}

void BM_TopK(benchmark::State& state) {
  const auto& snap = corpus(static_cast<std::size_t>(state.range(0)));
  const rank::DailyWindow window{kNow - domain::Seconds{5400}};
  for (auto _ : state)
    benchmark::DoNotOptimize(rank::top_k(snap, window, rank::kGridSize, rank::kDailyMetric,
                                         policy_of(state)));
  label(state);
}

void sizes(benchmark::internal::Benchmark* b) {
  for (const std::int64_t n : {10'000, 100'000, 400'000})
    for (const std::int64_t parallel : {0, 1}) b->Args({n, parallel});
  b->Unit(benchmark::kMicrosecond);
}

}  // namespace

BENCHMARK(BM_Match)->Apply(sizes);
BENCHMARK(BM_OrderPrefix)->Apply(sizes);
BENCHMARK(BM_Query)->Apply(sizes);
BENCHMARK(BM_TopK)->Apply(sizes);

BENCHMARK_MAIN();
