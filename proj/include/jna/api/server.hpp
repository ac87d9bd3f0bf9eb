#pragma once

#include <memory>
#include <string>

#include "jna/api/handlers.hpp"

namespace httplib {
class Server;
}

namespace jna::api {

// Binds ApiService to HTTP routes:
//   GET /api/posts, /api/top10, /api/grid, /api/publishers
// and, if `static_dir` is non-empty, serves the web UI's assets at "/".
class HttpServer {
 public:
  HttpServer(ApiService& service, const std::string& static_dir = {});
  ~HttpServer();

  // Returns the bound port, or -1. port 0 picks a free port.
  int bind(const std::string& host, int port);
  // Blocks until stop().
  bool serve();
  void stop();

 private:
  ApiService& service_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace jna::api
