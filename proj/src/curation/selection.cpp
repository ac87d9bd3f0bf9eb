#include "jna/curation/selection.hpp"

#include <algorithm>
#include <stdexcept>

namespace jna::curation {

bool verify_page_link(bool site_declares_page, bool page_declares_site) noexcept {
  return site_declares_page || page_declares_site;
}

void check_invariants(const SourceSite& s) {
  if (s.classification == Classification::Junk &&
      qualifying_dimensions(s.final_criteria).size() < kJunkThreshold)
    throw std::invalid_argument(s.base_url + ": junk with fewer than three qualifying criteria");
  if (s.facebook_page_id &&
      !verify_page_link(s.verification.site_lists_page, s.verification.page_lists_site))
    throw std::invalid_argument(s.base_url + ": page attached without verification");
}

void resolve(SourceSite& s) {
  const auto r = consensus(s.coder_labels, s.override_labels);
  s.final_criteria = r.final_criteria;
  s.consensus_status = r.status;
  s.classification = r.status == ConsensusStatus::NeedsReview ? Classification::NeedsReview
                                                              : classify_source(r.final_criteria);
}

bool attach_page(SourceSite& s, const std::string& page_id, const std::string& page_name,
                 PageVerification v) {
  if (page_id.empty() || !verify_page_link(v.site_lists_page, v.page_lists_site)) return false;
  s.facebook_page_id = page_id;
  s.page_name = page_name;
  s.verification = v;
  return true;
}

std::vector<SourceSite> select_tracked(std::vector<SourceSite> sites, std::size_t n) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  std::erase_if(sites, [](const SourceSite& s) {
    return s.classification != Classification::Junk || !s.facebook_page_id ||
           !verify_page_link(s.verification.site_lists_page, s.verification.page_lists_site);
  });
  std::sort(sites.begin(), sites.end(), [](const SourceSite& a, const SourceSite& b) {
    if (a.twitter_share_count != b.twitter_share_count)
      return a.twitter_share_count > b.twitter_share_count;
    return a.base_url < b.base_url;
  });
  if (sites.size() > n) sites.resize(n);
  return sites;
}

std::vector<ingest::Publisher> to_publishers(const std::vector<SourceSite>& tracked) {
  std::vector<ingest::Publisher> out;
  out.reserve(tracked.size());
  for (const auto& s : tracked)
    out.push_back({*s.facebook_page_id, s.page_name.empty() ? s.base_url : s.page_name, s.base_url});
  return out;
}

}  // namespace jna::curation
