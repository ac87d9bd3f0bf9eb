#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "jna/rank/ordering.hpp"
#include "jna/store/snapshot.hpp"

// Scan kernels behind query and top-k. Each exists as an OpenMP version and
// a serial reference with identical results; tests hold them equal.
namespace jna::store {

struct ScanFilter {
  domain::Timestamp since{};
  domain::Timestamp until{};
  std::string folded_keyword;         // empty: no keyword filter
  std::vector<std::string> page_ids;  // sorted; empty: all pages
};

enum class ExecPolicy { Parallel, Serial };

bool matches(const StoredPost& p, const ScanFilter& f);

namespace parallel {
// Indices (ascending) of posts satisfying the filter.
std::vector<std::uint32_t> match(std::span<const StoredPost> posts, const ScanFilter& f);
// Reorders `idx` so its first min(prefix, size) entries are the leading
// posts under (key, dir) in order, then truncates to that length.
void order_prefix(std::span<const StoredPost> posts, std::vector<std::uint32_t>& idx,
                  rank::SortKey key, rank::Direction dir, std::size_t prefix);
}  // namespace parallel

namespace serial {
std::vector<std::uint32_t> match(std::span<const StoredPost> posts, const ScanFilter& f);
void order_prefix(std::span<const StoredPost> posts, std::vector<std::uint32_t>& idx,
                  rank::SortKey key, rank::Direction dir, std::size_t prefix);
}  // namespace serial

std::vector<std::uint32_t> match(std::span<const StoredPost> posts, const ScanFilter& f,
                                 ExecPolicy policy);
void order_prefix(std::span<const StoredPost> posts, std::vector<std::uint32_t>& idx,
                  rank::SortKey key, rank::Direction dir, std::size_t prefix, ExecPolicy policy);

}  // namespace jna::store
