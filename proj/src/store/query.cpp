#include "jna/store/query.hpp"

#include <algorithm>

#include "jna/store/text.hpp"

namespace jna::store {

void validate(const QuerySpec& q, domain::Timestamp now, int retention_days) {
  if (q.since > q.until) throw QueryError("since", "since must not be later than until");
  if (q.since < now - domain::kDay * retention_days)
    throw QueryError("since", "since reaches beyond the " + std::to_string(retention_days) +
                                  "-day retention window");
  if (q.limit < 1 || q.limit > kMaxQueryLimit)
    throw QueryError("limit", "limit must be between 1 and " + std::to_string(kMaxQueryLimit));
  if (q.page_ids)
    for (const auto& id : *q.page_ids)
      if (id.empty()) throw QueryError("page_ids", "page id must not be empty");
}

QueryResult run_query(const Snapshot& snap, const QuerySpec& q, ExecPolicy policy) {
  ScanFilter filter;
  filter.since = q.since;
  filter.until = q.until;
  if (q.keyword) filter.folded_keyword = fold_case(*q.keyword);
  if (q.page_ids) {
    filter.page_ids = *q.page_ids;
    std::sort(filter.page_ids.begin(), filter.page_ids.end());
    // A present-but-empty publisher set matches nothing.
    if (filter.page_ids.empty()) return {};
  }

  const auto candidates = snap.range(q.since, q.until);
  auto idx = match(candidates, filter, policy);

  QueryResult result;
  result.total_matching = idx.size();
  if (q.offset >= idx.size()) return result;

  order_prefix(candidates, idx, q.sort, q.direction, q.offset + q.limit, policy);
  for (std::size_t i = q.offset; i < idx.size(); ++i)
    result.posts.push_back(candidates[idx[i]].post);
  return result;
}

}  // namespace jna::store
