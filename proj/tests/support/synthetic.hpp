#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jna/domain/post.hpp"

namespace jna::testkit {

// Reference instant used by the synthetic corpus: 2018-11-06T23:30:00Z,
// i.e. 18:30 EST, after that day's 17:00 cutoff (22:00Z).
domain::Timestamp corpus_now();

struct CorpusShape {
  std::size_t posts = 1000;
  std::size_t pages = 12;
  std::size_t in_window = 350;  // posts placed in the daily window ending at the last cutoff
  int max_days_back = 44;
  std::uint64_t seed = 20181106;
};

// Deterministic synthetic posts. Contains deliberate ties (equal engagement
// and age, equal posted_at), zero-age posts, empty messages, posts without
// images, and mixed-case ASCII, Latin-1, German sharp-s and Cyrillic
// keyword spellings.
std::vector<domain::Post> synthetic_posts(const CorpusShape& shape = {});

std::vector<std::string> synthetic_page_ids(std::size_t pages);

}  // namespace jna::testkit
