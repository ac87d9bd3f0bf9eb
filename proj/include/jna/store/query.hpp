#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "jna/domain/post.hpp"
#include "jna/rank/ordering.hpp"
#include "jna/store/kernels.hpp"
#include "jna/store/snapshot.hpp"

namespace jna::store {

inline constexpr std::size_t kMaxQueryLimit = 100;

struct QuerySpec {
  domain::Timestamp since{};
  domain::Timestamp until{};
  std::optional<std::string> keyword;
  std::optional<std::vector<std::string>> page_ids;
  rank::SortKey sort = rank::SortKey::newest();
  rank::Direction direction = rank::Direction::Descending;
  std::size_t offset = 0;
  std::size_t limit = 20;
};

// Invalid query; `field` names the offending QuerySpec field.
class QueryError : public std::invalid_argument {
 public:
  QueryError(std::string field, const std::string& message)
      : std::invalid_argument(message), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Throws QueryError. `since` must not reach further back than the
// retention window ending at `now`.
void validate(const QuerySpec& q, domain::Timestamp now, int retention_days);

struct QueryResult {
  std::vector<domain::Post> posts;
  std::size_t total_matching = 0;
};

// Filter, order and slice over a snapshot. Does not validate.
QueryResult run_query(const Snapshot& snap, const QuerySpec& q,
                      ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace jna::store
