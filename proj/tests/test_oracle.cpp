#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "monolat/error.hpp"
#include "monolat/oracle.hpp"

using namespace monolat;

TEST_CASE("enumerate_all small dimensions") {
  CHECK(oracle::enumerate_all(1) == std::vector<function_rep>{function_rep({{1}}, 1)});
  const auto two = oracle::enumerate_all(2);
  CHECK(two == std::vector<function_rep>{function_rep({{1}, {2}}, 2), function_rep({{1, 2}}, 2)});

  const std::set<function_rep> fig3{
      function_rep({{1}, {2}, {3}}, 3),         function_rep({{3}, {1, 2}}, 3),
      function_rep({{2}, {1, 3}}, 3),           function_rep({{1}, {2, 3}}, 3),
      function_rep({{1, 2}, {1, 3}, {2, 3}}, 3), function_rep({{1, 2}, {2, 3}}, 3),
      function_rep({{1, 2}, {1, 3}}, 3),        function_rep({{1, 3}, {2, 3}}, 3),
      function_rep({{1, 2, 3}}, 3),
  };
  const auto three = oracle::enumerate_all(3);
  CHECK(std::set<function_rep>(three.begin(), three.end()) == fig3);
  CHECK(three.size() == 9);
  CHECK(oracle::enumerate_all(4).size() == 114);
  CHECK(oracle::for_each_function(5, false, [](auto) {}) == 6894);
}

TEST_CASE("enumeration is duplicate free and canonical") {
  const auto four = oracle::enumerate_all(4);
  CHECK(std::set<function_rep>(four.begin(), four.end()).size() == four.size());
  CHECK(std::is_sorted(four.begin(), four.end()));
}

TEST_CASE("enumeration caps") {
  auto code = [](auto fn) {
    try {
      fn();
    } catch (const error& e) {
      return e.code();
    }
    return error_code::integrity;
  };
  CHECK(code([] { oracle::enumerate_all(6); }) == error_code::capability_exceeded);
  CHECK(code([] { oracle::for_each_function(7, true, [](auto) {}); }) ==
        error_code::capability_exceeded);
  CHECK(code([] { oracle::hasse_edges(5); }) == error_code::capability_exceeded);
  CHECK(code([] { oracle::count_table(10, oracle::dedekind_numbers()); }) ==
        error_code::capability_exceeded);
}

TEST_CASE("check_monotone_nondegenerate examples") {
  std::string bits(8, '0');
  for (int x = 0; x < 8; ++x)
    if ((x & 1) || ((x & 2) && (x & 4))) bits[x] = '1';
  CHECK(oracle::check_monotone_nondegenerate(truth_table::from_string(bits, 3)).pass);

  const auto constant = oracle::check_monotone_nondegenerate(truth_table::from_string("1111", 2));
  CHECK_FALSE(constant.pass);
  CHECK_FALSE(constant.variables[0].essential);
  CHECK_FALSE(constant.variables[1].essential);

  const auto x = oracle::check_monotone_nondegenerate(truth_table::from_string("0110", 2));
  CHECK_FALSE(x.pass);
  CHECK_FALSE(x.variables[0].positive);
  CHECK_FALSE(x.variables[1].positive);
}

TEST_CASE("hasse_edges") {
  CHECK(oracle::hasse_edges(1).empty());
  const auto two = oracle::hasse_edges(2);
  REQUIRE(two.size() == 1);
  CHECK(two[0] == oracle::edge{function_rep({{1, 2}}, 2), function_rep({{1}, {2}}, 2)});

  const function_rep top({{1}, {2}, {3}}, 3);
  const function_rep a({{3}, {1, 2}}, 3), b({{2}, {1, 3}}, 3), c({{1}, {2, 3}}, 3);
  const function_rep mid({{1, 2}, {1, 3}, {2, 3}}, 3);
  const function_rep d({{1, 2}, {2, 3}}, 3), e({{1, 2}, {1, 3}}, 3), f({{1, 3}, {2, 3}}, 3);
  const function_rep bottom({{1, 2, 3}}, 3);
  const std::set<oracle::edge> fig3{
      {a, top}, {b, top}, {c, top}, {mid, a}, {mid, b}, {mid, c},
      {d, mid}, {e, mid}, {f, mid}, {bottom, d}, {bottom, e}, {bottom, f},
  };
  const auto three = oracle::hasse_edges(3);
  CHECK(three.size() == 12);
  CHECK(std::set<oracle::edge>(three.begin(), three.end()) == fig3);
}

TEST_CASE("hasse_edges degree balance (p = 4)") {
  const auto edges = oracle::hasse_edges(4);
  std::map<function_rep, int> out_deg, in_deg;
  for (const auto& [lo, hi] : edges) {
    ++out_deg[lo];
    ++in_deg[hi];
    CHECK(precedes(lo, hi));
  }
  int out_sum = 0, in_sum = 0;
  for (const auto& [f, n] : out_deg) out_sum += n;
  for (const auto& [f, n] : in_deg) in_sum += n;
  CHECK(out_sum == in_sum);
  CHECK(out_sum == static_cast<int>(edges.size()));
  CHECK(out_deg.count(function_rep::supremum(4)) == 0);
  CHECK(in_deg.count(function_rep::infimum(4)) == 0);
}

TEST_CASE("count_table reproduces the recurrence and enumeration") {
  const auto rows = oracle::count_table(5, oracle::dedekind_numbers());
  REQUIRE(rows.size() == 5);
  const std::vector<int> expected{1, 2, 9, 114, 6894};
  for (int p = 1; p <= 5; ++p) {
    CHECK(rows[p - 1].p == p);
    CHECK(rows[p - 1].N == expected[p - 1]);
    CHECK(rows[p - 1].enumerated == static_cast<std::uint64_t>(expected[p - 1]));
  }
  // 168 - 2 - (4*1 + 6*2 + 4*9)
  CHECK(rows[3].M == 168);
  CHECK(rows[3].N == 168 - 2 - (4 * 1 + 6 * 2 + 4 * 9));
  CHECK(rows[4].M == 7581);
}

TEST_CASE("count_table beyond enumeration uses the recurrence only") {
  const auto rows = oracle::count_table(9, oracle::dedekind_numbers());
  CHECK(rows[5].N == 7785062);
  CHECK_FALSE(rows[5].enumerated.has_value());
  CHECK(rows[6].N == oracle::big_int("2414627396434"));
  // ...966 is the only N(8) consistent with the published N(9) below
  CHECK(rows[7].N == oracle::big_int("56130437209370320359966"));
  CHECK(rows[8].N == oracle::big_int("286386577668298410623295216696338374471993"));
}

TEST_CASE("count_table integrity failure reports both values") {
  auto m = oracle::dedekind_numbers();
  m[2] = 21;
  try {
    oracle::count_table(3, m);
    FAIL("accepted");
  } catch (const error& e) {
    CHECK(e.code() == error_code::integrity);
    CHECK(std::string(e.what()) == "p=3: recurrence gives 10 but enumeration found 9");
  }
}

TEST_CASE("count CSV") {
  std::ostringstream os;
  oracle::write_csv(os, oracle::count_table(4, oracle::dedekind_numbers()));
  CHECK(os.str() == "p,M,N,enumerated\n1,3,1,1\n2,6,2,2\n3,20,9,9\n4,168,114,114\n");
}
