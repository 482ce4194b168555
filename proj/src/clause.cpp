#include "monolat/clause.hpp"

#include <algorithm>
#include <sstream>

#include "monolat/error.hpp"

namespace monolat {

std::string_view to_string(error_code code) noexcept {
  switch (code) {
    case error_code::dimension_mismatch: return "dimension_mismatch";
    case error_code::invalid_dimension: return "invalid_dimension";
    case error_code::empty_clause: return "empty_clause";
    case error_code::index_out_of_range: return "index_out_of_range";
    case error_code::non_antichain: return "non_antichain";
    case error_code::non_cover: return "non_cover";
    case error_code::empty_function: return "empty_function";
    case error_code::syntax_error: return "syntax_error";
    case error_code::mixed_sign: return "mixed_sign";
    case error_code::not_dnf: return "not_dnf";
    case error_code::non_monotone: return "non_monotone";
    case error_code::degenerate: return "degenerate";
    case error_code::capability_exceeded: return "capability_exceeded";
    case error_code::integrity: return "integrity";
    case error_code::invalid_argument: return "invalid_argument";
  }
  return "unknown";
}

error_class classify(error_code code) noexcept {
  switch (code) {
    case error_code::capability_exceeded: return error_class::capability;
    case error_code::invalid_argument: return error_class::usage;
    default: return error_class::validation;
  }
}

void check_dimension(int p) {
  if (p < 1 || p > max_dimension)
    throw error(error_code::invalid_dimension,
                "dimension must be in 1.." + std::to_string(max_dimension) + ", got " +
                    std::to_string(p));
}

clause::clause(mask_t bits, int dimension) : bits_(bits), dimension_(dimension) {
  check_dimension(dimension);
  if (bits == 0) throw error(error_code::empty_clause, "clause must not be empty");
  if (!is_subset(bits, full_mask(dimension)))
    throw error(error_code::index_out_of_range,
                "clause " + to_string() + " has an index above p=" + std::to_string(dimension));
}

clause::clause(std::initializer_list<int> indices, int dimension)
    : clause(from_indices(std::span<const int>(indices.begin(), indices.size()), dimension)) {}

clause clause::from_indices(std::span<const int> indices, int dimension) {
  check_dimension(dimension);
  mask_t bits = 0;
  for (int i : indices) {
    if (i < 1 || i > dimension)
      throw error(error_code::index_out_of_range,
                  "index " + std::to_string(i) + " outside 1.." + std::to_string(dimension));
    bits |= bit_of(i);
  }
  return clause(bits, dimension);
}

std::vector<int> indices_of(mask_t bits) {
  std::vector<int> out;
  out.reserve(popcount(bits));
  while (bits) {
    out.push_back(std::countr_zero(bits) + 1);
    bits &= bits - 1;
  }
  return out;
}

std::vector<int> clause::indices() const { return indices_of(bits_); }

std::string clause::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : indices_of(bits_)) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

namespace {

void require_same_dimension(std::span<const clause> clauses) {
  if (clauses.empty()) return;
  const int p = clauses.front().dimension();
  for (const auto& c : clauses)
    if (c.dimension() != p)
      throw error(error_code::dimension_mismatch,
                  "clauses of dimension " + std::to_string(p) + " and " +
                      std::to_string(c.dimension()) + " mixed");
}

}  // namespace

bool is_antichain(std::span<const clause> clauses) {
  require_same_dimension(clauses);
  for (std::size_t i = 0; i < clauses.size(); ++i)
    for (std::size_t j = 0; j < clauses.size(); ++j)
      if (i != j && clauses[i].subset_of(clauses[j])) return false;
  return true;
}

bool is_cover(std::span<const clause> clauses, int p) {
  require_same_dimension(clauses);
  if (!clauses.empty() && clauses.front().dimension() != p)
    throw error(error_code::dimension_mismatch,
                "clauses have dimension " + std::to_string(clauses.front().dimension()) +
                    ", expected " + std::to_string(p));
  mask_t all = 0;
  for (const auto& c : clauses) all |= c.bits();
  return all == full_mask(p);
}

}  // namespace monolat
