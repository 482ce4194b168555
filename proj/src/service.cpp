#include "monolat/service.hpp"

#include <charconv>

#include "httplib.h"
#include "monolat/json_io.hpp"
#include "monolat/oracle.hpp"
#include "monolat/text.hpp"

namespace monolat {

namespace {

using json_io::json;

const std::string& require(const query_params& params, std::string_view name) {
  auto it = params.find(name);
  if (it == params.end() || it->second.empty())
    throw error(error_code::invalid_argument, "missing query parameter '" + std::string(name) + "'");
  return it->second;
}

long long integer_param(const query_params& params, std::string_view name) {
  const auto& text = require(params, name);
  long long value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size())
    throw error(error_code::invalid_argument,
                "query parameter '" + std::string(name) + "' must be an integer");
  return value;
}

int dimension_param(const query_params& params) {
  const auto p = integer_param(params, "p");
  if (p < 1 || p > max_dimension)
    throw error(error_code::invalid_dimension,
                "p must be in 1.." + std::to_string(max_dimension));
  return static_cast<int>(p);
}

// Text without negations takes its signs from `signs`; text with negations
// must agree with it.
parsed_function function_param(const query_params& params) {
  const int p = dimension_param(params);
  auto parsed = parse_function(require(params, "f"), p);
  if (auto it = params.find("signs"); it != params.end() && !it->second.empty()) {
    auto signs = sign_structure::parse(it->second, p);
    if (!parsed.signs.all_positive() && !(parsed.signs == signs))
      throw error(error_code::mixed_sign, "signs '" + signs.to_string() +
                                              "' disagree with the function text ('" +
                                              parsed.signs.to_string() + "')");
    parsed.signs = std::move(signs);
  }
  return parsed;
}

json dispatch(std::string_view path, const query_params& params, const service_config& config) {
  if (path == "/v1/function") {
    const auto in = function_param(params);
    return json_io::describe_function(in.function, in.signs, config.exact_cap);
  }
  if (path == "/v1/parents" || path == "/v1/children") {
    const auto in = function_param(params);
    const auto d = path == "/v1/parents" ? direction::parent : direction::child;
    return json_io::neighbors_json(in.function, in.signs, d, immediate_neighbors(in.function, d));
  }
  if (path == "/v1/walk") {
    const int p = dimension_param(params);
    const auto dir = params.count("dir") ? parse_walk_direction(require(params, "dir"))
                                         : walk_direction::up;
    const auto seed = params.count("seed") ? integer_param(params, "seed") : 0;
    return json_io::trace_json(random_walk(p, dir, static_cast<std::uint64_t>(seed), config.walk_cap));
  }
  if (path == "/v1/counts") {
    const auto max_p = integer_param(params, "maxp");
    const auto m = oracle::dedekind_numbers();
    if (max_p > static_cast<long long>(m.size()))
      throw error(error_code::capability_exceeded,
                  "counts are available up to p=" + std::to_string(m.size()));
    return json_io::counts_json(oracle::count_table(static_cast<int>(max_p), m, config.long_mode));
  }
  throw std::out_of_range(std::string(path));
}

}  // namespace

http_response api::handle(std::string_view path, const query_params& params) const {
  try {
    return {200, dispatch(path, params, config_).dump()};
  } catch (const error& e) {
    const int status = classify(e.code()) == error_class::capability ? 422 : 400;
    return {status, json_io::error_json(e).dump()};
  } catch (const std::out_of_range&) {
    return {404, json{{"error", {{"code", "not_found"}, {"message", "unknown endpoint"}}}}.dump()};
  }
}

struct http_server::impl {
  explicit impl(service_config config) : handler(config) {}
  api handler;
  httplib::Server server;
};

http_server::http_server(service_config config) : impl_(std::make_unique<impl>(config)) {
  for (const char* path : {"/v1/function", "/v1/parents", "/v1/children", "/v1/walk", "/v1/counts"}) {
    impl_->server.Get(path, [this, path](const httplib::Request& req, httplib::Response& res) {
      query_params params;
      for (const auto& [k, v] : req.params) params.emplace(k, v);
      const auto out = impl_->handler.handle(path, params);
      res.status = out.status;
      res.set_header("Access-Control-Allow-Origin", "*");
      res.set_content(out.body, "application/json");
    });
  }
}

http_server::~http_server() { stop(); }

int http_server::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->server.bind_to_any_port(host);
    if (bound < 0) throw error(error_code::invalid_argument, "cannot bind " + host);
    return bound;
  }
  if (!impl_->server.bind_to_port(host, port))
    throw error(error_code::invalid_argument,
                "cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void http_server::run() { impl_->server.listen_after_bind(); }

void http_server::stop() { impl_->server.stop(); }

}  // namespace monolat
