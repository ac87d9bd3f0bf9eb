#include "jna/curation/consensus.hpp"

namespace jna::curation {

std::string_view status_token(ConsensusStatus s) noexcept {
  switch (s) {
    case ConsensusStatus::Agreed: return "agreed";
    case ConsensusStatus::ExecutiveDecided: return "executive-decided";
    case ConsensusStatus::NeedsReview: return "needs-review";
  }
  return "?";
}

std::optional<ConsensusStatus> parse_status(std::string_view token) noexcept {
  if (token == "agreed") return ConsensusStatus::Agreed;
  if (token == "executive-decided") return ConsensusStatus::ExecutiveDecided;
  if (token == "needs-review") return ConsensusStatus::NeedsReview;
  return std::nullopt;
}

ConsensusResult consensus(const std::array<CriteriaSet, 3>& coder_labels,
                          const std::optional<CriteriaSet>& override_labels) {
  if (coder_labels[0] == coder_labels[1] && coder_labels[1] == coder_labels[2])
    return {coder_labels[0], ConsensusStatus::Agreed};
  if (override_labels) return {*override_labels, ConsensusStatus::ExecutiveDecided};
  return {{}, ConsensusStatus::NeedsReview};
}

}  // namespace jna::curation
