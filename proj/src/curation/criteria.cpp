#include "jna/curation/criteria.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace jna::curation {

std::string_view tag_token(CriterionTag t) noexcept {
  switch (t) {
    case CriterionTag::P: return "P";
    case CriterionTag::S: return "S";
    case CriterionTag::Cr: return "Cr";
    case CriterionTag::B: return "B";
    case CriterionTag::LB: return "LB";
    case CriterionTag::RB: return "RB";
    case CriterionTag::Ct: return "Ct";
    case CriterionTag::JN_AGGR: return "JN_AGGR";
  }
  return "?";
}

std::optional<CriterionTag> parse_tag(std::string_view token) {
  std::string up;
  for (const char c : token)
    up += static_cast<char>(c == ' ' ? '_' : std::toupper(static_cast<unsigned char>(c)));
  if (up == "JN_AGG") return CriterionTag::JN_AGGR;
  for (const auto t : kAllTags) {
    std::string canon(tag_token(t));
    std::transform(canon.begin(), canon.end(), canon.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (canon == up) return t;
  }
  return std::nullopt;
}

CriteriaSet parse_tags(const std::set<std::string>& tokens) {
  CriteriaSet out;
  for (const auto& tok : tokens) {
    const auto t = parse_tag(tok);
    if (!t) throw std::invalid_argument("unknown criterion '" + tok + "'");
    out.insert(*t);
  }
  return out;
}

std::string format_tags(const CriteriaSet& tags, std::string_view sep) {
  std::string out;
  for (const auto t : tags) {
    if (!out.empty()) out += sep;
    out += tag_token(t);
  }
  return out;
}

std::set<Dimension> qualifying_dimensions(const CriteriaSet& tags) {
  std::set<Dimension> dims;
  for (const auto t : tags) {
    switch (t) {
      case CriterionTag::P: dims.insert(Dimension::Professionalism); break;
      case CriterionTag::S: dims.insert(Dimension::Style); break;
      case CriterionTag::Cr: dims.insert(Dimension::Credibility); break;
      case CriterionTag::B:
      case CriterionTag::LB:
      case CriterionTag::RB: dims.insert(Dimension::Bias); break;
      case CriterionTag::Ct: dims.insert(Dimension::Counterfeit); break;
      case CriterionTag::JN_AGGR: dims.insert(Dimension::Aggregator); break;
    }
  }
  return dims;
}

std::string_view classification_token(Classification c) noexcept {
  switch (c) {
    case Classification::Junk: return "junk";
    case Classification::NotJunk: return "not-junk";
    case Classification::NeedsReview: return "needs-review";
  }
  return "?";
}

std::optional<Classification> parse_classification(std::string_view token) noexcept {
  if (token == "junk") return Classification::Junk;
  if (token == "not-junk") return Classification::NotJunk;
  if (token == "needs-review") return Classification::NeedsReview;
  return std::nullopt;
}

Classification classify_source(const CriteriaSet& tags) {
  return qualifying_dimensions(tags).size() >= kJunkThreshold ? Classification::Junk
                                                              : Classification::NotJunk;
}

}  // namespace jna::curation
