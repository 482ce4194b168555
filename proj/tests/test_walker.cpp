#include <array>
#include <set>
#include <sstream>

#include "doctest.h"
#include "monolat/error.hpp"
#include "monolat/oracle.hpp"
#include "monolat/truth_table.hpp"
#include "monolat/walker.hpp"

using namespace monolat;

namespace {

std::vector<function_rep> path_of(const walk_trace& t) {
  std::vector<function_rep> out;
  for (const auto& s : t.steps) out.push_back(s.from);
  out.push_back(t.end);
  return out;
}

}  // namespace

TEST_CASE("walk_rng draws are bounded and reproducible") {
  walk_rng a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const auto n = static_cast<std::uint64_t>(i % 13 + 1);
    const auto x = a.below(n);
    CHECK(x < n);
    CHECK(x == b.below(n));
  }
  walk_rng one(3);
  CHECK(one.below(1) == 0);
}

TEST_CASE("walk_rng is close to uniform") {
  walk_rng rng(11);
  std::array<int, 6> hist{};
  for (int i = 0; i < 60000; ++i) ++hist[rng.below(6)];
  for (int h : hist) CHECK(std::abs(h - 10000) < 400);
}

TEST_CASE("p = 1 walk is empty") {
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    const auto t = random_walk(1, walk_direction::up, seed);
    CHECK(t.length() == 0);
    CHECK(t.start == function_rep::infimum(1));
    CHECK(t.end == function_rep::supremum(1));
  }
}

TEST_CASE("p = 2 walk is the single edge") {
  const auto t = random_walk(2, walk_direction::up, 5);
  REQUIRE(t.length() == 1);
  CHECK(t.steps[0].from == function_rep({{1, 2}}, 2));
  CHECK(t.steps[0].chosen.neighbor == function_rep({{1}, {2}}, 2));
  // {1} and {2} each fail to cover alone, so the only parent comes from R3
  CHECK(t.steps[0].chosen.produced_by == rule::r3);
  CHECK(t.steps[0].generated == rule_counts{0, 0, 1});
}

TEST_CASE("p = 3 walks follow Hasse edges") {
  const auto edges = oracle::hasse_edges(3);
  const std::set<oracle::edge> hasse(edges.begin(), edges.end());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto up = random_walk(3, walk_direction::up, seed);
    CHECK(up.length() == 4);
    const auto path = path_of(up);
    CHECK(path.front() == function_rep::infimum(3));
    CHECK(path.back() == function_rep::supremum(3));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(hasse.count({path[i], path[i + 1]}) == 1);

    const auto down = random_walk(3, walk_direction::down, seed);
    const auto dpath = path_of(down);
    CHECK(dpath.front() == function_rep::supremum(3));
    CHECK(dpath.back() == function_rep::infimum(3));
    for (std::size_t i = 0; i + 1 < dpath.size(); ++i)
      CHECK(hasse.count({dpath[i + 1], dpath[i]}) == 1);
  }
}

TEST_CASE("walks are deterministic per seed") {
  for (auto dir : {walk_direction::up, walk_direction::down}) {
    const auto a = random_walk(6, dir, 123);
    const auto b = random_walk(6, dir, 123);
    CHECK(path_of(a) == path_of(b));
    CHECK(a.cumulative == b.cumulative);
  }
  CHECK(path_of(random_walk(6, walk_direction::up, 1)) !=
        path_of(random_walk(6, walk_direction::up, 2)));
}

TEST_CASE("True-set size moves by the rule delta along every walk") {
  for (int p = 2; p <= 6; ++p)
    for (std::uint64_t seed = 0; seed < 10; ++seed)
      for (auto dir : {walk_direction::up, walk_direction::down}) {
        const auto t = random_walk(p, dir, seed);
        const std::uint64_t top = (std::uint64_t{1} << p) - 1;
        long long size = static_cast<long long>(true_set_size(t.start));
        CHECK(size == (dir == walk_direction::up ? 1 : static_cast<long long>(top)));
        rule_counts sum;
        for (const auto& s : t.steps) {
          const auto next = static_cast<long long>(true_set_size(s.chosen.neighbor));
          REQUIRE(next - size == rule_delta(s.chosen));
          size = next;
          sum += s.generated;
        }
        CHECK(size == (dir == walk_direction::up ? static_cast<long long>(top) : 1));
        CHECK(sum == t.cumulative);
        CHECK(t.length() >= (top - 1) / 2);
        CHECK(t.length() <= top - 1);
      }
}

TEST_CASE("walk cap") {
  CHECK_THROWS_AS(random_walk(default_walk_cap + 1, walk_direction::up, 0), error);
  CHECK_THROWS_AS(random_walk(0, walk_direction::up, 0), error);
  CHECK_THROWS_AS(random_walk(5, walk_direction::up, 0, 4), error);
  CHECK(random_walk(5, walk_direction::up, 0, 5).end == function_rep::supremum(5));
}

TEST_CASE("run_experiment examples") {
  SUBCASE("p = 2") {
    const auto stats = run_experiment(2, 2, 100, walk_direction::up, 0);
    REQUIRE(stats.size() == 1);
    CHECK(stats[0].traces == 100);
    CHECK(stats[0].mean_length == 1.0);
    CHECK(stats[0].std_length == 0.0);
    CHECK(stats[0].cumulative_total == rule_counts{0, 0, 100});
  }
  SUBCASE("p = 3") {
    const auto stats = run_experiment(3, 3, 100, walk_direction::up, 0);
    CHECK(stats[0].mean_length == 4.0);
  }
  SUBCASE("no traces") {
    const auto stats = run_experiment(4, 5, 0, walk_direction::up, 0);
    REQUIRE(stats.size() == 2);
    for (const auto& s : stats) {
      CHECK(s.traces == 0);
      CHECK(s.mean_length == 0.0);
      CHECK(s.cumulative_total == rule_counts{});
      CHECK(s.per_step_r1 == 0.0);
    }
  }
  CHECK_THROWS_AS(run_experiment(3, 2, 1, walk_direction::up, 0), error);
}

TEST_CASE("experiment results do not depend on worker count") {
  const auto one = run_experiment(4, 6, 12, walk_direction::down, 9, 1);
  const auto many = run_experiment(4, 6, 12, walk_direction::down, 9, 4);
  REQUIRE(one.size() == many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].mean_length == many[i].mean_length);
    CHECK(one[i].cumulative_total == many[i].cumulative_total);
  }
}

TEST_CASE("experiment CSV header") {
  std::ostringstream os;
  write_csv(os, run_experiment(2, 2, 3, walk_direction::up, 0));
  const auto text = os.str();
  CHECK(text.rfind("p,direction,traces,mean_len,std_len,cum_r1,cum_r2,cum_r3,per_step_r1,"
                   "per_step_r2,per_step_r3,mean_ms,q1_ms,q3_ms\n2,up,3,1,0,0,0,1,0,0,1,",
                   0) == 0);
}

TEST_CASE("walk statistics trends for p = 2..7") {
  const auto stats = run_experiment(2, 7, 30, walk_direction::up, 99, 1);
  for (std::size_t i = 1; i < stats.size(); ++i) {
    CAPTURE(stats[i].p);
    CHECK(stats[i].mean_length > stats[i - 1].mean_length);
    CHECK(stats[i].per_step_r1 >= stats[i - 1].per_step_r1);
    if (stats[i].p > 4) CHECK(stats[i].per_step_r3 < stats[i - 1].per_step_r3);
  }
}
