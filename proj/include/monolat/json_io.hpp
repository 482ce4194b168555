#pragma once

#include <span>
#include <vector>

#include "json.hpp"
#include "monolat/neighbors.hpp"
#include "monolat/oracle.hpp"
#include "monolat/text.hpp"
#include "monolat/walker.hpp"

// Wire format of the /v1 API, shared by the service and the CLI's json output.
namespace monolat::json_io {

using json = nlohmann::ordered_json;

/// Sorted array of sorted index arrays.
json function_json(const function_rep& f);
json rendering_json(const function_rep& f, const sign_structure& signs);

json describe_function(const function_rep& f, const sign_structure& signs,
                       int exact_cap = default_exact_cap);
json neighbors_json(const function_rep& f, const sign_structure& signs, direction d,
                    std::span<const neighbor_result> results);
json rule_counts_json(const rule_counts& c);
json trace_json(const walk_trace& t);
json stats_json(const walk_stats& s);
json counts_json(std::span<const oracle::count_row> rows);
json error_json(const error& e);

}  // namespace monolat::json_io
