#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "monolat/truth_table.hpp"
#include "monolat/walker.hpp"

namespace monolat {

struct service_config {
  /// Enables enumeration-backed counts up to p = 6.
  bool long_mode = false;
  int walk_cap = default_walk_cap;
  int exact_cap = default_exact_cap;
};

struct http_response {
  int status = 200;
  std::string body;
};

using query_params = std::map<std::string, std::string, std::less<>>;

/// Stateless request handling for the /v1 JSON API, independent of any socket.
///
///   GET /v1/function?f=&p=[&signs=]   validation, renderings, True-set size
///   GET /v1/parents?f=&p=[&signs=]    immediate parents with rule and delta
///   GET /v1/children?f=&p=[&signs=]   immediate children with rule and delta
///   GET /v1/walk?p=&dir=&seed=        one random walk trace
///   GET /v1/counts?maxp=              N(p) table
///
/// Errors are JSON bodies `{"error": {"code", "message"[, "position"]}}` with
/// status 400, or 422 when a capability cap is exceeded.
class api {
 public:
  explicit api(service_config config = {}) : config_(config) {}

  http_response handle(std::string_view path, const query_params& params) const;

 private:
  service_config config_;
};

/// cpp-httplib server exposing `api`.
class http_server {
 public:
  explicit http_server(service_config config = {});
  ~http_server();
  http_server(const http_server&) = delete;
  http_server& operator=(const http_server&) = delete;

  /// Binds to `port`, or to any free port when it is 0. Returns the port.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop().
  void run();
  void stop();

 private:
  struct impl;
  std::unique_ptr<impl> impl_;
};

}  // namespace monolat
