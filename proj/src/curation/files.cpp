#include "jna/curation/files.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>

namespace jna::curation {

using nlohmann::ordered_json;

namespace {

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  return in;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string strip_cr(std::string s) {
  if (!s.empty() && s.back() == '\r') s.pop_back();
  return s;
}

// Calls fn(json, line_no) for each non-blank line; rethrows with location.
template <typename Fn>
void each_json_line(const std::filesystem::path& path, Fn fn) {
  auto in = open(path);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (blank(line)) continue;
    try {
      fn(ordered_json::parse(line));
    } catch (const std::exception& e) {
      throw FormatError(path.filename().string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
}

std::string string_field(const ordered_json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end()) throw FormatError(std::string("missing field '") + name + "'");
  if (it->is_string()) return it->get<std::string>();
  if (it->is_number_integer()) return std::to_string(it->get<std::int64_t>());
  throw FormatError(std::string("field '") + name + "' must be a string");
}

bool bool_field(const ordered_json& j, const char* name) {
  const auto it = j.find(name);
  if (it == j.end() || it->is_null()) return false;
  if (!it->is_boolean()) throw FormatError(std::string("field '") + name + "' must be a boolean");
  return it->get<bool>();
}

CriteriaSet tags_from(const ordered_json& arr) {
  if (!arr.is_array()) throw FormatError("criteria must be an array of tokens");
  std::set<std::string> tokens;
  for (const auto& t : arr) {
    if (!t.is_string()) throw FormatError("criterion tokens must be strings");
    tokens.insert(t.get<std::string>());
  }
  try {
    return parse_tags(tokens);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

ordered_json tags_json(const CriteriaSet& tags) {
  ordered_json arr = ordered_json::array();
  for (const auto t : tags) arr.push_back(std::string(tag_token(t)));
  return arr;
}

std::array<CriteriaSet, 3> coders_from(const ordered_json& arr) {
  if (!arr.is_array() || arr.size() != 3)
    throw FormatError("exactly three coder label sets are required");
  return {tags_from(arr[0]), tags_from(arr[1]), tags_from(arr[2])};
}

}  // namespace

std::vector<TweetRecord> read_tweets(const std::filesystem::path& path) {
  std::vector<TweetRecord> out;
  each_json_line(path, [&](const ordered_json& j) {
    TweetRecord t;
    t.tweet_id = string_field(j, "tweet_id");
    t.text = j.contains("text") ? string_field(j, "text") : std::string();
    if (const auto it = j.find("hashtags"); it != j.end())
      for (const auto& h : *it) t.hashtags.insert(normalize_hashtag(h.get<std::string>()));
    if (const auto it = j.find("urls"); it != j.end())
      for (const auto& u : *it) t.urls.push_back(u.get<std::string>());
    out.push_back(std::move(t));
  });
  return out;
}

std::set<std::string> read_hashtags(const std::filesystem::path& path) {
  auto in = open(path);
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_cr(line);
    if (blank(line)) continue;
    const auto first = line.find_first_not_of(" \t");
    const auto last = line.find_last_not_of(" \t");
    out.insert(normalize_hashtag(line.substr(first, last - first + 1)));
  }
  return out;
}

void write_hashtags(std::ostream& out, const std::set<std::string>& tags) {
  for (const auto& t : tags) out << t << '\n';
}

void write_url_counts(std::ostream& out, const UrlCounts& counts) {
  std::vector<std::pair<std::string, std::size_t>> rows(counts.counts.begin(), counts.counts.end());
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [url, n] : rows) out << url << '\t' << n << '\n';
}

std::map<std::string, std::uint64_t> read_url_counts(const std::filesystem::path& path) {
  auto in = open(path);
  std::map<std::string, std::uint64_t> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = strip_cr(line);
    if (blank(line)) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw FormatError(path.filename().string() + ":" + std::to_string(n) + ": expected url<TAB>count");
    try {
      std::size_t used = 0;
      const auto count = std::stoull(line.substr(tab + 1), &used);
      if (used != line.size() - tab - 1) throw std::invalid_argument("trailing text");
      out[line.substr(0, tab)] += count;
    } catch (const std::exception&) {
      throw FormatError(path.filename().string() + ":" + std::to_string(n) + ": bad count");
    }
  }
  return out;
}

std::vector<SourceSite> read_codings(const std::filesystem::path& path) {
  std::vector<SourceSite> out;
  each_json_line(path, [&](const ordered_json& j) {
    SourceSite s;
    s.base_url = string_field(j, "base_url");
    s.coder_labels = coders_from(j.at("coders"));
    if (const auto it = j.find("override"); it != j.end() && !it->is_null())
      s.override_labels = tags_from(*it);
    out.push_back(std::move(s));
  });
  return out;
}

std::vector<std::pair<std::string, CriteriaSet>> read_criteria_table(
    const std::filesystem::path& path) {
  auto in = open(path);
  std::vector<std::pair<std::string, CriteriaSet>> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    line = strip_cr(line);
    if (blank(line)) continue;
    std::vector<std::string> cols;
    std::stringstream ss(line);
    std::string col;
    while (std::getline(ss, col, '\t'))
      if (!blank(col)) cols.push_back(col.substr(col.find_first_not_of(' '),
                                                 col.find_last_not_of(' ') - col.find_first_not_of(' ') + 1));
    if (cols.empty()) continue;
    CriteriaSet tags;
    for (std::size_t i = 1; i < cols.size(); ++i) {
      const auto t = parse_tag(cols[i]);
      if (!t)
        throw FormatError(path.filename().string() + ":" + std::to_string(n) +
                          ": unknown criterion '" + cols[i] + "'");
      tags.insert(*t);
    }
    out.emplace_back(cols[0], std::move(tags));
  }
  return out;
}

std::vector<PageLink> read_page_links(const std::filesystem::path& path) {
  std::vector<PageLink> out;
  each_json_line(path, [&](const ordered_json& j) {
    PageLink p;
    p.base_url = string_field(j, "base_url");
    p.page_id = string_field(j, "page_id");
    p.page_name = j.contains("page_name") ? string_field(j, "page_name") : std::string();
    p.verification.site_lists_page = bool_field(j, "site_lists_page");
    p.verification.page_lists_site = bool_field(j, "page_lists_site");
    out.push_back(std::move(p));
  });
  return out;
}

std::string ledger_line(const SourceSite& s) {
  ordered_json j;
  j["base_url"] = s.base_url;
  j["twitter_share_count"] = s.twitter_share_count;
  ordered_json coders = ordered_json::array();
  for (const auto& c : s.coder_labels) coders.push_back(tags_json(c));
  j["coder_labels"] = std::move(coders);
  j["override"] = s.override_labels ? tags_json(*s.override_labels) : ordered_json(nullptr);
  j["final_criteria"] = tags_json(s.final_criteria);
  j["consensus"] = std::string(status_token(s.consensus_status));
  j["classification"] = std::string(classification_token(s.classification));
  j["facebook_page_id"] = s.facebook_page_id ? ordered_json(*s.facebook_page_id) : ordered_json(nullptr);
  j["page_name"] = s.page_name;
  j["site_lists_page"] = s.verification.site_lists_page;
  j["page_lists_site"] = s.verification.page_lists_site;
  return j.dump();
}

SourceSite parse_ledger_line(const std::string& line) {
  const auto j = ordered_json::parse(line);
  SourceSite s;
  s.base_url = string_field(j, "base_url");
  s.twitter_share_count = j.value("twitter_share_count", std::uint64_t{0});
  s.coder_labels = coders_from(j.at("coder_labels"));
  if (const auto it = j.find("override"); it != j.end() && !it->is_null())
    s.override_labels = tags_from(*it);
  s.final_criteria = tags_from(j.value("final_criteria", ordered_json::array()));
  const auto status = parse_status(j.value("consensus", std::string("needs-review")));
  if (!status) throw FormatError("unknown consensus status");
  s.consensus_status = *status;
  const auto cls = parse_classification(j.value("classification", std::string("needs-review")));
  if (!cls) throw FormatError("unknown classification");
  s.classification = *cls;
  if (const auto it = j.find("facebook_page_id"); it != j.end() && !it->is_null())
    s.facebook_page_id = it->get<std::string>();
  s.page_name = j.value("page_name", std::string());
  s.verification.site_lists_page = bool_field(j, "site_lists_page");
  s.verification.page_lists_site = bool_field(j, "page_lists_site");
  try {
    check_invariants(s);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  return s;
}

std::vector<SourceSite> read_ledger(const std::filesystem::path& path) {
  auto in = open(path);
  std::vector<SourceSite> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (blank(line)) continue;
    try {
      out.push_back(parse_ledger_line(line));
    } catch (const std::exception& e) {
      throw FormatError(path.filename().string() + ":" + std::to_string(n) + ": " + e.what());
    }
  }
  return out;
}

void write_ledger(std::ostream& out, const std::vector<SourceSite>& sites) {
  for (const auto& s : sites) out << ledger_line(s) << '\n';
}

}  // namespace jna::curation
