#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jna/curation/consensus.hpp"
#include "jna/curation/criteria.hpp"
#include "jna/ingest/service_config.hpp"

namespace jna::curation {

// A page belongs to a site if either side declares the link.
bool verify_page_link(bool site_declares_page, bool page_declares_site) noexcept;

struct PageVerification {
  bool site_lists_page = false;
  bool page_lists_site = false;

  friend bool operator==(const PageVerification&, const PageVerification&) = default;
};

struct SourceSite {
  std::string base_url;
  std::uint64_t twitter_share_count = 0;
  std::array<CriteriaSet, 3> coder_labels{};
  std::optional<CriteriaSet> override_labels;
  CriteriaSet final_criteria;
  ConsensusStatus consensus_status = ConsensusStatus::NeedsReview;
  Classification classification = Classification::NeedsReview;
  std::optional<std::string> facebook_page_id;
  std::string page_name;
  PageVerification verification;

  friend bool operator==(const SourceSite&, const SourceSite&) = default;
};

// Throws std::invalid_argument when a junk site has fewer than three
// qualifying dimensions, or a page id is attached without verification.
void check_invariants(const SourceSite& s);

// Applies consensus then classification (needs-review stays unclassified).
void resolve(SourceSite& s);

// Attaches a page if the link verifies. Returns whether it was attached.
bool attach_page(SourceSite& s, const std::string& page_id, const std::string& page_name,
                 PageVerification v);

// Junk sites with a verified page, by share count descending then base_url
// ascending, truncated to n (n >= 1, else std::invalid_argument).
std::vector<SourceSite> select_tracked(std::vector<SourceSite> sites, std::size_t n);

std::vector<ingest::Publisher> to_publishers(const std::vector<SourceSite>& tracked);

}  // namespace jna::curation
