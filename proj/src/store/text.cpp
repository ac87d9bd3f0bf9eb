#include "jna/store/text.hpp"

#include <unicode/uchar.h>
#include <unicode/ustring.h>
#include <unicode/utf8.h>

#include <stdexcept>
#include <vector>

namespace jna::store {

std::string fold_case(std::string_view utf8) {
  if (utf8.empty()) return {};
  UErrorCode status = U_ZERO_ERROR;
  int32_t wide_len = 0;
  const auto in_len = static_cast<int32_t>(utf8.size());

  u_strFromUTF8WithSub(nullptr, 0, &wide_len, utf8.data(), in_len, 0xFFFD, nullptr, &status);
  if (status != U_BUFFER_OVERFLOW_ERROR && U_FAILURE(status))
    throw std::runtime_error(std::string("utf-8 decode failed: ") + u_errorName(status));
  std::vector<UChar> wide(static_cast<std::size_t>(wide_len));
  status = U_ZERO_ERROR;
  u_strFromUTF8WithSub(wide.data(), wide_len, nullptr, utf8.data(), in_len, 0xFFFD, nullptr,
                       &status);

  // Folding can lengthen text (e.g. U+00DF -> "ss").
  std::vector<UChar> folded(wide.size() * 3 + 1);
  status = U_ZERO_ERROR;
  const int32_t folded_len = u_strFoldCase(folded.data(), static_cast<int32_t>(folded.size()),
                                           wide.data(), wide_len, U_FOLD_CASE_DEFAULT, &status);
  if (U_FAILURE(status))
    throw std::runtime_error(std::string("case folding failed: ") + u_errorName(status));

  int32_t out_len = 0;
  status = U_ZERO_ERROR;
  u_strToUTF8(nullptr, 0, &out_len, folded.data(), folded_len, &status);
  std::string out(static_cast<std::size_t>(out_len), '\0');
  status = U_ZERO_ERROR;
  u_strToUTF8(out.data(), out_len, nullptr, folded.data(), folded_len, &status);
  if (U_FAILURE(status) && status != U_STRING_NOT_TERMINATED_WARNING)
    throw std::runtime_error(std::string("utf-8 encode failed: ") + u_errorName(status));
  return out;
}

namespace {

// Byte length of the code point starting at i (1 for stray bytes).
std::size_t step(std::string_view s, std::size_t i) {
  int32_t pos = static_cast<int32_t>(i);
  UChar32 c = 0;
  U8_NEXT(reinterpret_cast<const uint8_t*>(s.data()), pos, static_cast<int32_t>(s.size()), c);
  (void)c;
  return static_cast<std::size_t>(pos) - i;
}

}  // namespace

std::size_t code_point_count(std::string_view utf8) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < utf8.size(); i += step(utf8, i)) ++n;
  return n;
}

std::string excerpt(std::string_view utf8, std::size_t max_code_points) {
  if (max_code_points == 0) return {};
  if (code_point_count(utf8) <= max_code_points) return std::string(utf8);
  std::size_t i = 0;
  for (std::size_t n = 0; n + 1 < max_code_points; ++n) i += step(utf8, i);
  std::string out(utf8.substr(0, i));
  out += "\xE2\x80\xA6";
  return out;
}

}  // namespace jna::store
