#include "jna/store/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <queue>

#include "jna/store/text.hpp"

namespace jna::store {

bool matches(const StoredPost& p, const ScanFilter& f) {
  if (p.post.posted_at < f.since || p.post.posted_at >= f.until) return false;
  if (!f.page_ids.empty() &&
      !std::binary_search(f.page_ids.begin(), f.page_ids.end(), p.post.page_id))
    return false;
  if (!f.folded_keyword.empty() && !contains_folded(p.folded_message, f.folded_keyword))
    return false;
  return true;
}

namespace {

struct Before {
  std::span<const StoredPost> posts;
  rank::SortKey key;
  rank::Direction dir;

  bool operator()(std::uint32_t a, std::uint32_t b) const {
    const auto& pa = posts[a];
    const auto& pb = posts[b];
    return rank::compare_fields(pa.fields, pa.post.post_id, pb.fields, pb.post.post_id, key,
                                dir) < 0;
  }
};

}  // namespace

namespace serial {

std::vector<std::uint32_t> match(std::span<const StoredPost> posts, const ScanFilter& f) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < posts.size(); ++i)
    if (matches(posts[i], f)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

void order_prefix(std::span<const StoredPost> posts, std::vector<std::uint32_t>& idx,
                  rank::SortKey key, rank::Direction dir, std::size_t prefix) {
  std::sort(idx.begin(), idx.end(), Before{posts, key, dir});
  if (idx.size() > prefix) idx.resize(prefix);
}

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> match(std::span<const StoredPost> posts, const ScanFilter& f) {
  const auto n = static_cast<std::int64_t>(posts.size());
  std::vector<std::vector<std::uint32_t>> per_thread(
      static_cast<std::size_t>(omp_get_max_threads()));

  // schedule(static) hands thread t the t-th contiguous block, so joining
  // the per-thread lists in thread order keeps indices ascending.
#pragma omp parallel
  {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i)
      if (matches(posts[static_cast<std::size_t>(i)], f))
        local.push_back(static_cast<std::uint32_t>(i));
  }

  std::size_t total = 0;
  for (const auto& v : per_thread) total += v.size();
  std::vector<std::uint32_t> out;
  out.reserve(total);
  for (const auto& v : per_thread) out.insert(out.end(), v.begin(), v.end());
  return out;
}

void order_prefix(std::span<const StoredPost> posts, std::vector<std::uint32_t>& idx,
                  rank::SortKey key, rank::Direction dir, std::size_t prefix) {
  const Before before{posts, key, dir};
  const std::size_t n = idx.size();
  const std::size_t want = std::min(prefix, n);
  const auto chunks = static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  if (want == 0) {
    idx.clear();
    return;
  }
  if (chunks == 1 || n < 2048) {
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(want), idx.end(),
                      before);
    idx.resize(want);
    return;
  }

  // Each chunk keeps its own leading `want` entries; a k-way merge of the
  // chunk heads then yields the global prefix.
  std::vector<std::size_t> bounds(chunks + 1);
  for (std::size_t c = 0; c <= chunks; ++c) bounds[c] = n * c / chunks;
  std::vector<std::size_t> kept(chunks);

#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const auto cu = static_cast<std::size_t>(c);
    auto first = idx.begin() + static_cast<std::ptrdiff_t>(bounds[cu]);
    auto last = idx.begin() + static_cast<std::ptrdiff_t>(bounds[cu + 1]);
    const auto len = static_cast<std::size_t>(last - first);
    const auto k = std::min(want, len);
    std::partial_sort(first, first + static_cast<std::ptrdiff_t>(k), last, before);
    kept[cu] = k;
  }

  using Cursor = std::pair<std::size_t, std::size_t>;  // (position, end)
  auto later = [&](const Cursor& a, const Cursor& b) { return before(idx[b.first], idx[a.first]); };
  std::priority_queue<Cursor, std::vector<Cursor>, decltype(later)> heads(later);
  for (std::size_t c = 0; c < chunks; ++c)
    if (kept[c] > 0) heads.emplace(bounds[c], bounds[c] + kept[c]);

  std::vector<std::uint32_t> out;
  out.reserve(want);
  while (out.size() < want) {
    auto [pos, end] = heads.top();
    heads.pop();
    out.push_back(idx[pos]);
    if (++pos < end) heads.emplace(pos, end);
  }
  idx = std::move(out);
}

}  // namespace parallel

std::vector<std::uint32_t> match(std::span<const StoredPost> posts, const ScanFilter& f,
                                 ExecPolicy policy) {
  return policy == ExecPolicy::Parallel ? parallel::match(posts, f) : serial::match(posts, f);
}

void order_prefix(std::span<const StoredPost> posts, std::vector<std::uint32_t>& idx,
                  rank::SortKey key, rank::Direction dir, std::size_t prefix, ExecPolicy policy) {
  if (policy == ExecPolicy::Parallel)
    parallel::order_prefix(posts, idx, key, dir, prefix);
  else
    serial::order_prefix(posts, idx, key, dir, prefix);
}

}  // namespace jna::store
