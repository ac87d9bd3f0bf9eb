#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace jna::store {

// Full Unicode case folding of UTF-8 text. Invalid byte sequences become
// U+FFFD.
std::string fold_case(std::string_view utf8);

// Substring test over already-folded text.
inline bool contains_folded(std::string_view folded_haystack, std::string_view folded_needle) {
  return folded_haystack.find(folded_needle) != std::string_view::npos;
}

std::size_t code_point_count(std::string_view utf8);

// First `max_code_points` code points of the text; when truncation happens
// the last kept code point is replaced by U+2026 so the result still fits.
std::string excerpt(std::string_view utf8, std::size_t max_code_points);

}  // namespace jna::store
