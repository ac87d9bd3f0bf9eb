#include "jna/curation/base_url.hpp"

#include <algorithm>
#include <cctype>

namespace jna::curation {

namespace {

bool valid_label(std::string_view label) {
  if (label.empty() || label.size() > 63) return false;
  if (label.front() == '-' || label.back() == '-') return false;
  return std::all_of(label.begin(), label.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '-';
  });
}

bool valid_host(std::string_view host) {
  if (host.empty() || host.size() > 253) return false;
  std::size_t labels = 0;
  std::size_t start = 0;
  while (true) {
    const auto dot = host.find('.', start);
    const auto label = host.substr(start, dot == std::string_view::npos ? dot : dot - start);
    if (!valid_label(label)) return false;
    ++labels;
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  // A top-level label is never all digits unless the whole host is IPv4.
  const auto tld = host.substr(host.rfind('.') + 1);
  const bool numeric_tld = std::all_of(tld.begin(), tld.end(), [](unsigned char c) { return std::isdigit(c); });
  if (numeric_tld && labels != 4) return false;
  return labels >= 2;
}

}  // namespace

std::optional<std::string> base_url(std::string_view url) {
  while (!url.empty() && std::isspace(static_cast<unsigned char>(url.front()))) url.remove_prefix(1);
  while (!url.empty() && std::isspace(static_cast<unsigned char>(url.back()))) url.remove_suffix(1);

  if (const auto scheme_end = url.find("://"); scheme_end != std::string_view::npos) {
    const auto scheme = url.substr(0, scheme_end);
    if (scheme.empty() || !std::isalpha(static_cast<unsigned char>(scheme.front())) ||
        !std::all_of(scheme.begin(), scheme.end(), [](unsigned char c) {
          return std::isalnum(c) || c == '+' || c == '-' || c == '.';
        }))
      return std::nullopt;
    url.remove_prefix(scheme_end + 3);
  } else if (url.starts_with("//")) {
    url.remove_prefix(2);
  }

  auto authority = url.substr(0, url.find_first_of("/?#"));
  if (const auto at = authority.rfind('@'); at != std::string_view::npos)
    authority.remove_prefix(at + 1);
  if (const auto colon = authority.find(':'); colon != std::string_view::npos) {
    const auto port = authority.substr(colon + 1);
    if (!std::all_of(port.begin(), port.end(), [](unsigned char c) { return std::isdigit(c); }))
      return std::nullopt;
    authority = authority.substr(0, colon);
  }
  if (!authority.empty() && authority.back() == '.') authority.remove_suffix(1);

  std::string host(authority);
  std::transform(host.begin(), host.end(), host.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (host.starts_with("www.")) host.erase(0, 4);
  if (!valid_host(host)) return std::nullopt;
  return host;
}

UrlCounts extract_base_urls(std::span<const TweetRecord> corpus) {
  UrlCounts out;
  for (const auto& tweet : corpus)
    for (const auto& u : tweet.urls) {
      if (const auto b = base_url(u))
        ++out.counts[*b];
      else
        ++out.skipped;
    }
  return out;
}

}  // namespace jna::curation
