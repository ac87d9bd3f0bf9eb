#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace jna::curation {

// Source criteria codes. LB and RB are the two directions of the Bias (B)
// criterion; JN_AGGR marks aggregators of junk sources.
enum class CriterionTag : std::uint8_t { P, S, Cr, B, LB, RB, Ct, JN_AGGR };

using CriteriaSet = std::set<CriterionTag>;

inline constexpr CriterionTag kAllTags[] = {CriterionTag::P,  CriterionTag::S,  CriterionTag::Cr,
                                           CriterionTag::B,  CriterionTag::LB, CriterionTag::RB,
                                           CriterionTag::Ct, CriterionTag::JN_AGGR};

// Canonical on-disk token: P, S, Cr, B, LB, RB, Ct, JN_AGGR.
std::string_view tag_token(CriterionTag t) noexcept;

// Case-insensitive; also accepts "JN AGGR", "JN AGG" and "JN_AGG".
std::optional<CriterionTag> parse_tag(std::string_view token);

// Parses a list of tokens; throws std::invalid_argument on an unknown token.
CriteriaSet parse_tags(const std::set<std::string>& tokens);
std::string format_tags(const CriteriaSet& tags, std::string_view sep = ",");

enum class Dimension : std::uint8_t { Professionalism, Style, Credibility, Bias, Counterfeit, Aggregator };

// Distinct qualifying dimensions; B, LB and RB collapse into Bias.
std::set<Dimension> qualifying_dimensions(const CriteriaSet& tags);

inline constexpr std::size_t kJunkThreshold = 3;

enum class Classification : std::uint8_t { Junk, NotJunk, NeedsReview };

std::string_view classification_token(Classification c) noexcept;
std::optional<Classification> parse_classification(std::string_view token) noexcept;

// Junk iff at least kJunkThreshold qualifying dimensions are present.
Classification classify_source(const CriteriaSet& tags);

}  // namespace jna::curation
