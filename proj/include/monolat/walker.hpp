#pragma once

#include <chrono>
#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "monolat/function_rep.hpp"
#include "monolat/neighbors.hpp"

namespace monolat {

enum class walk_direction { up, down };

std::string_view to_string(walk_direction d) noexcept;
walk_direction parse_walk_direction(std::string_view text);

/// Default upper bound on p for walks.
inline constexpr int default_walk_cap = 11;

/// Seeded source for walk choices: std::mt19937_64, whose output sequence is
/// fixed by the standard, with unbiased bounded draws by rejection.
class walk_rng {
 public:
  explicit walk_rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n), n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

struct rule_counts {
  std::uint64_t r1 = 0;
  std::uint64_t r2 = 0;
  std::uint64_t r3 = 0;

  void add(rule r) noexcept;
  std::uint64_t total() const noexcept { return r1 + r2 + r3; }
  rule_counts& operator+=(const rule_counts& o) noexcept;
  friend bool operator==(const rule_counts&, const rule_counts&) = default;
};

struct walk_step {
  function_rep from;
  neighbor_result chosen;
  /// Every neighbour generated at `from`, by rule, not only the chosen one.
  rule_counts generated;
};

struct walk_trace {
  int p = 0;
  walk_direction dir = walk_direction::up;
  std::uint64_t seed = 0;
  std::vector<walk_step> steps;
  function_rep start = function_rep::infimum(1);
  function_rep end = function_rep::infimum(1);
  rule_counts cumulative;
  std::chrono::nanoseconds duration{0};

  std::size_t length() const noexcept { return steps.size(); }
};

/// Walks from the infimum to the supremum (up) or back (down), choosing
/// uniformly among all immediate neighbours at each node.
walk_trace random_walk(int p, walk_direction dir, std::uint64_t seed,
                       int p_cap = default_walk_cap);

struct walk_stats {
  int p = 0;
  walk_direction dir = walk_direction::up;
  std::size_t traces = 0;
  double mean_length = 0;
  double std_length = 0;
  /// Summed over all traces.
  rule_counts cumulative_total;
  /// Average per trace of the cumulative counts.
  double mean_cumulative_r1 = 0, mean_cumulative_r2 = 0, mean_cumulative_r3 = 0;
  /// Average cumulative count divided by the average trace length.
  double per_step_r1 = 0, per_step_r2 = 0, per_step_r3 = 0;
  double mean_ms = 0, q1_ms = 0, median_ms = 0, q3_ms = 0;
};

walk_stats summarize(int p, walk_direction dir, std::span<const walk_trace> traces);

/// `traces_per_p` walks for every p in [p_min, p_max]; trace i uses seed
/// base_seed + i. Traces run on `threads` workers (0 = hardware concurrency);
/// results do not depend on the worker count.
std::vector<walk_stats> run_experiment(int p_min, int p_max, std::size_t traces_per_p,
                                       walk_direction dir, std::uint64_t base_seed,
                                       unsigned threads = 0, int p_cap = default_walk_cap);

void write_csv(std::ostream& os, std::span<const walk_stats> stats);

}  // namespace monolat
