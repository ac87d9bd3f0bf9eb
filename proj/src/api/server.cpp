#include "jna/api/server.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

namespace jna::api {

namespace {

void reply(httplib::Response& res, const ApiResponse& r) {
  res.status = r.status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(r.body.dump(-1, ' ', false, Json::error_handler_t::replace),
                  "application/json; charset=utf-8");
}

}  // namespace

HttpServer::HttpServer(ApiService& service, const std::string& static_dir)
    : service_(service), server_(std::make_unique<httplib::Server>()) {
  auto& s = *server_;
  s.Get("/api/posts", [this](const httplib::Request& req, httplib::Response& res) {
    reply(res, service_.posts(Params(req.params.begin(), req.params.end())));
  });
  s.Get("/api/top10", [this](const httplib::Request&, httplib::Response& res) {
    reply(res, service_.top10());
  });
  s.Get("/api/grid", [this](const httplib::Request&, httplib::Response& res) {
    reply(res, service_.grid());
  });
  s.Get("/api/publishers", [this](const httplib::Request&, httplib::Response& res) {
    reply(res, service_.publishers());
  });
  s.set_exception_handler([](const httplib::Request& req, httplib::Response& res,
                             std::exception_ptr ep) {
    std::string what = "unknown error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception& e) {
      what = e.what();
    } catch (...) {
    }
    spdlog::error("{} {} failed: {}", req.method, req.path, what);
    reply(res, {500, api_error("internal_error", "internal server error")});
  });
  if (!static_dir.empty() && !s.set_mount_point("/", static_dir))
    spdlog::warn("static directory {} not found; serving API only", static_dir);
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpServer::serve() { return server_->listen_after_bind(); }

void HttpServer::stop() { server_->stop(); }

}  // namespace jna::api
