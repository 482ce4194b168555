#include "monolat/walker.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "monolat/error.hpp"

namespace monolat {

std::string_view to_string(walk_direction d) noexcept { return d == walk_direction::up ? "up" : "down"; }

walk_direction parse_walk_direction(std::string_view text) {
  if (text == "up") return walk_direction::up;
  if (text == "down") return walk_direction::down;
  throw error(error_code::invalid_argument,
              "direction must be 'up' or 'down', got '" + std::string(text) + "'");
}

std::uint64_t walk_rng::below(std::uint64_t n) {
  // reject the 2^64 mod n lowest draws so every residue is equally likely
  const std::uint64_t threshold = (0 - n) % n;
  std::uint64_t x;
  do x = engine_();
  while (x < threshold);
  return x % n;
}

void rule_counts::add(rule r) noexcept {
  switch (r) {
    case rule::r1: ++r1; break;
    case rule::r2: ++r2; break;
    case rule::r3: ++r3; break;
  }
}

rule_counts& rule_counts::operator+=(const rule_counts& o) noexcept {
  r1 += o.r1;
  r2 += o.r2;
  r3 += o.r3;
  return *this;
}

walk_trace random_walk(int p, walk_direction dir, std::uint64_t seed, int p_cap) {
  check_dimension(p);
  if (p > p_cap)
    throw error(error_code::capability_exceeded,
                "walks are limited to p <= " + std::to_string(p_cap) + ", got p=" +
                    std::to_string(p));
  const auto clock_start = std::chrono::steady_clock::now();
  const direction step_dir = dir == walk_direction::up ? direction::parent : direction::child;

  walk_trace trace;
  trace.p = p;
  trace.dir = dir;
  trace.seed = seed;
  trace.start = dir == walk_direction::up ? function_rep::infimum(p) : function_rep::supremum(p);

  walk_rng rng(seed);
  function_rep current = trace.start;
  for (;;) {
    auto options = immediate_neighbors(current, step_dir);
    if (options.empty()) break;
    rule_counts generated;
    for (const auto& n : options) generated.add(n.produced_by);
    trace.cumulative += generated;
    auto& chosen = options[rng.below(options.size())];
    function_rep next = chosen.neighbor;
    trace.steps.push_back({std::move(current), std::move(chosen), generated});
    current = std::move(next);
  }
  trace.end = std::move(current);
  trace.duration = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - clock_start);
  return trace;
}

namespace {

double quantile(std::vector<double> sorted_values, double q) {
  if (sorted_values.empty()) return 0;
  const double pos = q * static_cast<double>(sorted_values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  return sorted_values[lo] + (sorted_values[hi] - sorted_values[lo]) * (pos - static_cast<double>(lo));
}

}  // namespace

walk_stats summarize(int p, walk_direction dir, std::span<const walk_trace> traces) {
  walk_stats s;
  s.p = p;
  s.dir = dir;
  s.traces = traces.size();
  if (traces.empty()) return s;

  const double n = static_cast<double>(traces.size());
  std::vector<double> ms;
  double len_sum = 0;
  for (const auto& t : traces) {
    len_sum += static_cast<double>(t.length());
    s.cumulative_total += t.cumulative;
    ms.push_back(std::chrono::duration<double, std::milli>(t.duration).count());
  }
  s.mean_length = len_sum / n;
  double var = 0;
  for (const auto& t : traces) var += std::pow(static_cast<double>(t.length()) - s.mean_length, 2);
  s.std_length = std::sqrt(var / n);

  s.mean_cumulative_r1 = static_cast<double>(s.cumulative_total.r1) / n;
  s.mean_cumulative_r2 = static_cast<double>(s.cumulative_total.r2) / n;
  s.mean_cumulative_r3 = static_cast<double>(s.cumulative_total.r3) / n;
  if (s.mean_length > 0) {
    s.per_step_r1 = s.mean_cumulative_r1 / s.mean_length;
    s.per_step_r2 = s.mean_cumulative_r2 / s.mean_length;
    s.per_step_r3 = s.mean_cumulative_r3 / s.mean_length;
  }

  std::sort(ms.begin(), ms.end());
  double ms_sum = 0;
  for (double v : ms) ms_sum += v;
  s.mean_ms = ms_sum / n;
  s.q1_ms = quantile(ms, 0.25);
  s.median_ms = quantile(ms, 0.5);
  s.q3_ms = quantile(ms, 0.75);
  return s;
}

std::vector<walk_stats> run_experiment(int p_min, int p_max, std::size_t traces_per_p,
                                       walk_direction dir, std::uint64_t base_seed,
                                       unsigned threads, int p_cap) {
  if (p_min < 1 || p_max < p_min)
    throw error(error_code::invalid_argument,
                "invalid p range " + std::to_string(p_min) + ".." + std::to_string(p_max));
  if (p_max > p_cap)
    throw error(error_code::capability_exceeded,
                "walks are limited to p <= " + std::to_string(p_cap) + ", got p=" +
                    std::to_string(p_max));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  std::vector<walk_stats> out;
  for (int p = p_min; p <= p_max; ++p) {
    std::vector<walk_trace> traces(traces_per_p);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next++; i < traces_per_p; i = next++)
        traces[i] = random_walk(p, dir, base_seed + i, p_cap);
    };
    if (threads == 1 || traces_per_p < 2) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    }
    out.push_back(summarize(p, dir, traces));
  }
  return out;
}

void write_csv(std::ostream& os, std::span<const walk_stats> stats) {
  os << "p,direction,traces,mean_len,std_len,cum_r1,cum_r2,cum_r3,per_step_r1,per_step_r2,"
        "per_step_r3,mean_ms,q1_ms,q3_ms\n";
  for (const auto& s : stats)
    os << s.p << ',' << to_string(s.dir) << ',' << s.traces << ',' << s.mean_length << ','
       << s.std_length << ',' << s.mean_cumulative_r1 << ',' << s.mean_cumulative_r2 << ','
       << s.mean_cumulative_r3 << ',' << s.per_step_r1 << ',' << s.per_step_r2 << ','
       << s.per_step_r3 << ',' << s.mean_ms << ',' << s.q1_ms << ',' << s.q3_ms << '\n';
}

}  // namespace monolat
