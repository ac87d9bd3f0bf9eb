#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "jna/curation/criteria.hpp"

namespace jna::curation {

enum class ConsensusStatus : std::uint8_t { Agreed, ExecutiveDecided, NeedsReview };

std::string_view status_token(ConsensusStatus s) noexcept;
std::optional<ConsensusStatus> parse_status(std::string_view token) noexcept;

struct ConsensusResult {
  CriteriaSet final_criteria;
  ConsensusStatus status = ConsensusStatus::NeedsReview;

  friend bool operator==(const ConsensusResult&, const ConsensusResult&) = default;
};

// Unanimous coders -> their set (agreed). Otherwise the override, when
// given (executive-decided). Otherwise an empty set awaiting review.
ConsensusResult consensus(const std::array<CriteriaSet, 3>& coder_labels,
                          const std::optional<CriteriaSet>& override_labels = std::nullopt);

}  // namespace jna::curation
