#include <doctest.h>

#include <sstream>
#include <thread>

#include "httplib.h"
#include "json.hpp"
#include "monolat/cli.hpp"
#include "monolat/service.hpp"

using namespace monolat;
using nlohmann::json;

namespace {

json get(const api& a, std::string_view path, query_params params, int expected_status = 200) {
  const auto r = a.handle(path, params);
  CHECK_MESSAGE(r.status == expected_status, r.body);
  return json::parse(r.body);
}

std::string rules_of(const json& body) {
  std::string s;
  for (const auto& n : body["neighbors"]) s += n["rule"].get<std::string>();
  return s;
}

}  // namespace

TEST_CASE("function endpoint") {
  api a;
  auto body = get(a, "/v1/function", {{"f", "x1 | x2 & !x3"}, {"p", "3"}});
  CHECK(body["function"] == json::parse("[[1],[2,3]]"));
  CHECK(body["signs"] == "++-");
  CHECK(body["rendering"]["sets"] == "{1},{2,-3}");
  CHECK(body["trueSetSize"] == 5);
  CHECK(body["valid"] == true);
  CHECK(body["isInfimum"] == false);
}

TEST_CASE("neighbour endpoints") {
  api a;
  auto parents = get(a, "/v1/parents", {{"f", "{1,2,3},{3,4}"}, {"p", "4"}});
  CHECK(parents["direction"] == "parent");
  CHECK(parents["neighbors"].size() == 2);
  CHECK(rules_of(parents).find("R1") != std::string::npos);
  CHECK(rules_of(parents).find("R3") != std::string::npos);
  for (const auto& n : parents["neighbors"]) CHECK(n["trueSetDelta"].get<int>() > 0);

  auto children = get(a, "/v1/children", {{"f", "{1,2,3,4}"}, {"p", "4"}});
  CHECK(children["neighbors"].empty());

  auto signed_children = get(a, "/v1/children", {{"f", "{1},{2,3}"}, {"p", "3"}, {"signs", "+-+"}});
  CHECK(signed_children["signs"] == "+-+");
  CHECK(signed_children["neighbors"][0]["rendering"]["expr"] == "x1 & !x2 | x1 & x3 | !x2 & x3");
}

TEST_CASE("walk and counts endpoints") {
  api a;
  auto walk = get(a, "/v1/walk", {{"p", "3"}, {"seed", "5"}});
  CHECK(walk["direction"] == "up");
  CHECK(walk["end"] == json::parse("[[1],[2],[3]]"));
  CHECK(walk["steps"].size() == walk["length"].get<std::size_t>());

  auto counts = get(a, "/v1/counts", {{"maxp", "4"}});
  CHECK(counts["rows"].size() == 4);
  CHECK(counts["rows"].back()["N"] == "114");
  CHECK(counts["rows"].back()["enumerated"] == 114);
}

TEST_CASE("error statuses") {
  api a;
  auto bad = get(a, "/v1/parents", {{"f", "{1,2},{1}"}, {"p", "2"}}, 400);
  CHECK(bad["error"]["code"] == "non_antichain");

  auto syntax = get(a, "/v1/function", {{"f", "x1 | $"}, {"p", "1"}}, 400);
  CHECK(syntax["error"]["code"] == "syntax_error");
  CHECK(syntax["error"]["position"] == 5);

  get(a, "/v1/function", {{"p", "3"}}, 400);
  get(a, "/v1/function", {{"f", "{1}"}, {"p", "zero"}}, 400);
  get(a, "/v1/children", {{"f", "x1 | !x2"}, {"p", "2"}, {"signs", "++"}}, 400);
  get(a, "/v1/walk", {{"p", "3"}, {"dir", "sideways"}}, 400);

  auto cap = get(a, "/v1/counts", {{"maxp", "10"}}, 422);
  CHECK(cap["error"]["code"] == "capability_exceeded");
  // Beyond the enumeration cap only the recurrence is reported.
  auto six = get(a, "/v1/counts", {{"maxp", "6"}});
  CHECK(six["rows"].back()["N"] == "7785062");
  CHECK(six["rows"].back()["enumerated"].is_null());
  get(a, "/v1/walk", {{"p", "40"}}, 422);

  get(a, "/v2/function", {}, 404);
}

TEST_CASE("responses are deterministic and agree with the CLI") {
  api a;
  const query_params q{{"f", "{1,2,3},{3,4}"}, {"p", "4"}};
  CHECK(a.handle("/v1/parents", q).body == a.handle("/v1/parents", q).body);
  const query_params w{{"p", "5"}, {"seed", "9"}, {"dir", "down"}};
  auto first = json::parse(a.handle("/v1/walk", w).body);
  auto second = json::parse(a.handle("/v1/walk", w).body);
  first.erase("durationMs");
  second.erase("durationMs");
  CHECK(first == second);

  std::ostringstream out, err;
  REQUIRE(run_cli({"--p", "4", "--format", "json", "parents", "{1,2,3},{3,4}"}, out, err) == 0);
  CHECK(json::parse(out.str()) == json::parse(a.handle("/v1/parents", q).body));
}

TEST_CASE("http server round trip") {
  http_server server;
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::jthread runner([&] { server.run(); });

  httplib::Client client("127.0.0.1", port);
  client.set_connection_timeout(5);
  httplib::Result r;
  for (int attempt = 0; attempt < 50 && !r; ++attempt) {
    r = client.Get("/v1/children?f=%7B1%7D%2C%7B2%7D&p=2");
    if (!r) std::this_thread::sleep_for(std::chrono::milliseconds(20));
  }
  REQUIRE(r);
  CHECK(r->status == 200);
  CHECK(r->get_header_value("Access-Control-Allow-Origin") == "*");
  CHECK(json::parse(r->body)["neighbors"][0]["function"] == json::parse("[[1,2]]"));

  auto missing = client.Get("/nope");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  server.stop();
}
