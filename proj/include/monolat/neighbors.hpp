#pragma once

#include <string_view>
#include <vector>

#include "monolat/function_rep.hpp"

namespace monolat {

enum class rule { r1, r2, r3 };
enum class direction { parent, child };

std::string_view to_string(rule r) noexcept;
std::string_view to_string(direction d) noexcept;

/// One immediate neighbour together with the rule that produced it.
struct neighbor_result {
  function_rep neighbor;
  rule produced_by;
  direction dir;

  friend bool operator==(const neighbor_result&, const neighbor_result&) = default;
};

/// All immediate parents of `f`, sorted by neighbour then rule. Empty for the
/// supremum.
std::vector<neighbor_result> immediate_parents(const function_rep& f);

/// All immediate children of `f`, sorted by neighbour then rule. Empty for the
/// infimum.
std::vector<neighbor_result> immediate_children(const function_rep& f);

std::vector<neighbor_result> immediate_neighbors(const function_rep& f, direction d);

/// Change in True-set size along the edge: +1/+1/+2 for parents by R1/R2/R3,
/// the negation for children.
int rule_delta(rule r, direction d) noexcept;
inline int rule_delta(const neighbor_result& n) noexcept { return rule_delta(n.produced_by, n.dir); }

}  // namespace monolat
