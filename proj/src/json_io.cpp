#include "monolat/json_io.hpp"

#include "monolat/truth_table.hpp"

namespace monolat::json_io {

json function_json(const function_rep& f) {
  json out = json::array();
  for (mask_t m : f.masks()) out.push_back(indices_of(m));
  return out;
}

json rendering_json(const function_rep& f, const sign_structure& signs) {
  return {{"sets", render_function(f, signs, text_style::sets)},
          {"expr", render_function(f, signs, text_style::expr)}};
}

json describe_function(const function_rep& f, const sign_structure& signs, int exact_cap) {
  return {{"p", f.dimension()},
          {"function", function_json(f)},
          {"signs", signs.to_string()},
          {"rendering", rendering_json(f, signs)},
          {"valid", true},
          {"trueSetSize", true_set_size(f, exact_cap)},
          {"isInfimum", f.is_infimum()},
          {"isSupremum", f.is_supremum()}};
}

json neighbors_json(const function_rep& f, const sign_structure& signs, direction d,
                    std::span<const neighbor_result> results) {
  json list = json::array();
  for (const auto& r : results)
    list.push_back({{"function", function_json(r.neighbor)},
                    {"rendering", rendering_json(r.neighbor, signs)},
                    {"rule", to_string(r.produced_by)},
                    {"trueSetDelta", rule_delta(r)}});
  return {{"p", f.dimension()},
          {"function", function_json(f)},
          {"signs", signs.to_string()},
          {"rendering", rendering_json(f, signs)},
          {"direction", to_string(d)},
          {"neighbors", std::move(list)}};
}

json rule_counts_json(const rule_counts& c) {
  return {{"R1", c.r1}, {"R2", c.r2}, {"R3", c.r3}};
}

json trace_json(const walk_trace& t) {
  const auto signs = sign_structure::all_positive(t.p);
  json steps = json::array();
  for (const auto& s : t.steps)
    steps.push_back({{"from", function_json(s.from)},
                     {"to", function_json(s.chosen.neighbor)},
                     {"rendering", rendering_json(s.chosen.neighbor, signs)},
                     {"rule", to_string(s.chosen.produced_by)},
                     {"trueSetDelta", rule_delta(s.chosen)},
                     {"generated", rule_counts_json(s.generated)}});
  return {{"p", t.p},
          {"direction", to_string(t.dir)},
          {"seed", t.seed},
          {"length", t.length()},
          {"start", function_json(t.start)},
          {"end", function_json(t.end)},
          {"rendering", rendering_json(t.end, signs)},
          {"steps", std::move(steps)},
          {"cumulative", rule_counts_json(t.cumulative)},
          {"durationMs", std::chrono::duration<double, std::milli>(t.duration).count()}};
}

json stats_json(const walk_stats& s) {
  return {{"p", s.p},
          {"direction", to_string(s.dir)},
          {"traces", s.traces},
          {"meanLength", s.mean_length},
          {"stdLength", s.std_length},
          {"cumulativeTotal", rule_counts_json(s.cumulative_total)},
          {"meanCumulative",
           {{"R1", s.mean_cumulative_r1}, {"R2", s.mean_cumulative_r2}, {"R3", s.mean_cumulative_r3}}},
          {"perStep", {{"R1", s.per_step_r1}, {"R2", s.per_step_r2}, {"R3", s.per_step_r3}}},
          {"meanMs", s.mean_ms},
          {"q1Ms", s.q1_ms},
          {"medianMs", s.median_ms},
          {"q3Ms", s.q3_ms}};
}

json counts_json(std::span<const oracle::count_row> rows) {
  json list = json::array();
  for (const auto& r : rows) {
    json row = {{"p", r.p}, {"M", r.M.str()}, {"N", r.N.str()}};
    row["enumerated"] = r.enumerated ? json(*r.enumerated) : json(nullptr);
    list.push_back(std::move(row));
  }
  return {{"rows", std::move(list)}};
}

json error_json(const error& e) {
  json body = {{"code", to_string(e.code())}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const parse_error*>(&e)) body["position"] = pe->position();
  return {{"error", std::move(body)}};
}

}  // namespace monolat::json_io
