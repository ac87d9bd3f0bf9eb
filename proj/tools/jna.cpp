// jna: junk-news aggregator command line.
//
// Curation pipeline:  expand-hashtags, count-urls, consensus, classify, select
// Service:            serve, poll, export, import, prune

#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>

#include "jna/api/server.hpp"
#include "jna/curation/files.hpp"
#include "jna/ingest/fixture_connector.hpp"
#include "jna/ingest/scheduler.hpp"
#include "jna/ingest/service_config.hpp"

namespace {

using namespace jna;

std::ostream& output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  return file;
}

domain::Timestamp now_or(const std::string& text) {
  if (text.empty()) return ingest::SystemClock{}.now();
  const auto t = domain::parse_iso8601(text);
  if (!t) throw std::runtime_error("--now must be an ISO-8601 UTC timestamp");
  return *t;
}

std::stop_source g_stop;
jna::api::HttpServer* g_server = nullptr;

void on_signal(int) {
  g_stop.request_stop();
  if (g_server) g_server->stop();
}

int cmd_serve(const std::string& config_path) {
  const auto config = ingest::load_service_config(config_path);
  store::PostStore store(config.store_path, {config.retention_days});
  rank::DailySchedule schedule{rank::CivilZone(config.timezone),
                               rank::parse_local_time(config.cutoff_local_time)};
  ingest::SystemClock clock;

  std::jthread ingest_thread;
  std::unique_ptr<ingest::FixtureConnector> connector;
  std::unique_ptr<ingest::Poller> poller;
  if (!config.fixture_dir.empty() && !config.publishers.empty()) {
    connector = std::make_unique<ingest::FixtureConnector>(
        config.fixture_dir, clock,
        ingest::FixtureOptions{config.fixture_page_size, config.rate_budget_per_hour});
    poller = std::make_unique<ingest::Poller>(store, *connector,
                                              ingest::PollerOptions{config.retention_days});
    ingest_thread = std::jthread([&] {
      ingest::run_scheduler(*poller, config.page_ids(), clock, config.poll_interval,
                            g_stop.get_token());
    });
  } else {
    spdlog::info("no fixture_dir or publishers configured; ingestion disabled");
  }

  api::ApiService service(store, config.publishers, schedule, [&clock] { return clock.now(); });
  api::HttpServer server(service, config.static_dir);
  const int port = server.bind(config.bind_address, config.port);
  if (port < 0) throw std::runtime_error("cannot bind " + config.bind_address);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  spdlog::info("serving on http://{}:{}", config.bind_address, port);
  server.serve();
  g_stop.request_stop();
  return 0;
}

int cmd_poll(const std::string& config_path, const std::string& now_text) {
  const auto config = ingest::load_service_config(config_path);
  if (config.fixture_dir.empty()) throw std::runtime_error("config has no fixture_dir");
  if (config.publishers.empty()) throw std::runtime_error("config has no publishers");
  store::PostStore store(config.store_path, {config.retention_days});
  ingest::ManualClock clock(now_or(now_text));
  ingest::FixtureConnector connector(
      config.fixture_dir, clock,
      ingest::FixtureOptions{config.fixture_page_size, config.rate_budget_per_hour});
  ingest::Poller poller(store, connector, {config.retention_days});
  const auto pages = config.page_ids();
  const auto r = poller.poll_once(pages, clock.now());
  std::cout << "run_at\t" << domain::format_iso8601(r.run_at) << "\n"
            << "pages_polled\t" << r.pages_polled << "\n"
            << "posts_new\t" << r.posts_new << "\n"
            << "posts_skipped_duplicate\t" << r.posts_skipped_duplicate << "\n"
            << "posts_rejected\t" << r.posts_rejected << "\n"
            << "requests_used\t" << r.requests_used << "\n";
  for (const auto& e : r.errors) std::cout << "error\t" << e.page_id << "\t" << e.reason << "\n";
  return r.errors.empty() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Junk news aggregator: source curation, ingestion and query service"};
  app.require_subcommand(1);
  spdlog::set_level(spdlog::level::warn);
  bool verbose = false;
  app.add_flag("-v,--verbose", verbose, "Log at info level");

  // expand-hashtags
  std::string seeds_path, tweets_path, out_path;
  std::size_t min_co = 2;
  int rounds = 1;
  auto* expand = app.add_subcommand("expand-hashtags", "Snowball-expand a seed hashtag list");
  expand->add_option("--seeds", seeds_path, "Seed hashtags, one per line")->required();
  expand->add_option("--tweets", tweets_path, "Tweet corpus (JSON Lines)")->required();
  expand->add_option("--min-cooccurrence", min_co, "Tweets a hashtag must share with the set")
      ->capture_default_str();
  expand->add_option("--rounds", rounds, "Expansion rounds")->capture_default_str();
  expand->add_option("-o,--out", out_path, "Output file (default stdout)");

  // count-urls
  auto* count = app.add_subcommand("count-urls", "Count base-URL mentions in a tweet corpus");
  count->add_option("--tweets", tweets_path, "Tweet corpus (JSON Lines)")->required();
  count->add_option("-o,--out", out_path, "Output TSV (default stdout)");

  // consensus
  std::string codings_path, counts_path;
  auto* cons = app.add_subcommand("consensus", "Resolve triple-coded criteria into a ledger");
  cons->add_option("--codings", codings_path, "Coder labels (JSON Lines)")->required();
  cons->add_option("--counts", counts_path, "Base-URL counts TSV from count-urls");
  cons->add_option("-o,--out", out_path, "Output ledger (default stdout)");

  // classify
  std::string ledger_path, criteria_path;
  auto* classify = app.add_subcommand("classify", "Apply the three-criteria junk rule");
  auto* classify_ledger = classify->add_option("--ledger", ledger_path, "Ledger to classify");
  classify->add_option("--criteria", criteria_path, "Criteria TSV (site, tag, tag, ...)")
      ->excludes(classify_ledger);
  classify->add_option("-o,--out", out_path, "Output (default stdout)");

  // select
  std::string pages_path, ledger_out;
  std::size_t top_n = 50;
  auto* select = app.add_subcommand("select", "Pick the most shared verified junk sites");
  select->add_option("--ledger", ledger_path, "Classified ledger")->required();
  select->add_option("--pages", pages_path, "Page links (JSON Lines)")->required();
  select->add_option("-n,--top", top_n, "Number of sites to track")->capture_default_str();
  select->add_option("-o,--out", out_path, "Publishers JSON (default stdout)");
  select->add_option("--ledger-out", ledger_out, "Write the ledger with page links attached");

  // service commands
  std::string config_path, now_text, store_path, file_path;
  int retention = jna::store::kDefaultRetentionDays;
  auto* serve = app.add_subcommand("serve", "Run hourly ingestion and the HTTP API");
  serve->add_option("-c,--config", config_path, "Service config (JSON)")->required();
  auto* poll = app.add_subcommand("poll", "Run one ingestion pass from the fixture feeds");
  poll->add_option("-c,--config", config_path, "Service config (JSON)")->required();
  poll->add_option("--now", now_text, "Poll time (ISO-8601 UTC, default: current time)");
  auto* exp = app.add_subcommand("export", "Write all stored posts as record lines");
  exp->add_option("--store", store_path, "Store path")->required();
  exp->add_option("-o,--out", out_path, "Output (default stdout)");
  auto* imp = app.add_subcommand("import", "Load exported record lines into a store");
  imp->add_option("--store", store_path, "Store path")->required();
  imp->add_option("file", file_path, "Record file")->required();
  auto* prune = app.add_subcommand("prune", "Remove posts older than the retention window");
  prune->add_option("--store", store_path, "Store path")->required();
  prune->add_option("--retention-days", retention, "Days to keep (>= 31)")->capture_default_str();
  prune->add_option("--now", now_text, "Reference time (ISO-8601 UTC)");

  CLI11_PARSE(app, argc, argv);
  if (verbose) spdlog::set_level(spdlog::level::info);

  try {
    std::ofstream file;
    if (*expand) {
      const auto tweets = curation::read_tweets(tweets_path);
      const auto seeds = curation::read_hashtags(seeds_path);
      curation::write_hashtags(output(out_path, file),
                               curation::expand_hashtags(seeds, tweets, min_co, rounds));
    } else if (*count) {
      const auto counts = curation::extract_base_urls(curation::read_tweets(tweets_path));
      curation::write_url_counts(output(out_path, file), counts);
      std::cerr << "skipped\t" << counts.skipped << "\n";
    } else if (*cons) {
      auto sites = curation::read_codings(codings_path);
      std::map<std::string, std::uint64_t> counts;
      if (!counts_path.empty()) counts = curation::read_url_counts(counts_path);
      for (auto& s : sites) {
        const auto r = curation::consensus(s.coder_labels, s.override_labels);
        s.final_criteria = r.final_criteria;
        s.consensus_status = r.status;
        s.classification = curation::Classification::NeedsReview;
        if (const auto it = counts.find(s.base_url); it != counts.end())
          s.twitter_share_count = it->second;
      }
      curation::write_ledger(output(out_path, file), sites);
    } else if (*classify) {
      if (!criteria_path.empty()) {
        auto& out = output(out_path, file);
        for (const auto& [site, tags] : curation::read_criteria_table(criteria_path))
          out << site << '\t' << curation::classification_token(curation::classify_source(tags))
              << '\t' << curation::qualifying_dimensions(tags).size() << '\n';
      } else if (!ledger_path.empty()) {
        auto sites = curation::read_ledger(ledger_path);
        for (auto& s : sites) curation::resolve(s);
        curation::write_ledger(output(out_path, file), sites);
      } else {
        throw std::runtime_error("classify needs --ledger or --criteria");
      }
    } else if (*select) {
      auto sites = curation::read_ledger(ledger_path);
      std::map<std::string, curation::PageLink> links;
      for (auto& l : curation::read_page_links(pages_path)) links[l.base_url] = l;
      for (auto& s : sites) {
        const auto it = links.find(s.base_url);
        if (it == links.end()) continue;
        if (!curation::attach_page(s, it->second.page_id, it->second.page_name,
                                   it->second.verification))
          std::cerr << "unverified page link for " << s.base_url << "\n";
      }
      if (!ledger_out.empty()) {
        std::ofstream lf(ledger_out);
        curation::write_ledger(lf, sites);
      }
      const auto tracked = curation::select_tracked(sites, top_n);
      output(out_path, file) << ingest::serialize_publishers(curation::to_publishers(tracked));
    } else if (*serve) {
      return cmd_serve(config_path);
    } else if (*poll) {
      return cmd_poll(config_path, now_text);
    } else if (*exp) {
      store::PostStore store(store_path);
      store.export_records(output(out_path, file));
    } else if (*imp) {
      store::PostStore store(store_path);
      std::ifstream in(file_path);
      if (!in) throw std::runtime_error("cannot open " + file_path);
      std::cout << "imported\t" << store.import_records(in) << "\n";
    } else if (*prune) {
      store::PostStore store(store_path);
      std::cout << "removed\t" << store.prune(retention, now_or(now_text)) << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
