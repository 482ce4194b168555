#pragma once

#include <span>
#include <vector>

#include "monolat/clause.hpp"
#include "monolat/function_rep.hpp"

namespace monolat {

/// Inclusion-minimal sets meeting every edge of a hypergraph over {1..p},
/// in canonical order. Every edge must be non-empty.
std::vector<mask_t> minimal_transversals(std::span<const mask_t> edges, int p);

/// The inclusion-maximal sets incomparable with every clause of `f`.
std::vector<mask_t> maximal_independent_masks(const function_rep& f);
std::vector<clause> maximal_independent(const function_rep& f);

/// The inclusion-maximal non-empty sets strictly contained in some clause of
/// `f`. Each has exactly one element fewer than every clause containing it.
std::vector<mask_t> maximal_dominated_masks(const function_rep& f);
std::vector<clause> maximal_dominated(const function_rep& f);

}  // namespace monolat
