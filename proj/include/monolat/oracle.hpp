#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "monolat/function_rep.hpp"
#include "monolat/truth_table.hpp"

/// Brute-force ground truth over the whole of F_p for small p.
namespace monolat::oracle {

using big_int = boost::multiprecision::cpp_int;

/// Largest p enumerated by default, and with long mode enabled.
inline constexpr int enumeration_cap = 5;
inline constexpr int enumeration_cap_long = 6;
inline constexpr int hasse_cap = 4;
inline constexpr int hasse_cap_long = 5;

using monolat::check_monotone_nondegenerate;

/// Visits every antichain cover of {1..p} once; clause masks arrive in
/// canonical order. Returns the number visited.
std::uint64_t for_each_function(int p, bool long_mode,
                                const std::function<void(std::span<const mask_t>)>& visit);

/// Every function of F_p in canonical order. About N(p) allocations, so p = 6
/// takes a few GB; prefer for_each_function there.
std::vector<function_rep> enumerate_all(int p, bool long_mode = false);

/// Truth table as a 2^p-bit word (p <= 6), computed state by state.
std::uint64_t table_word(std::span<const mask_t> clauses, int p);

using edge = std::pair<function_rep, function_rep>;

/// Cover pairs (lower, upper) of the True-set inclusion order on F_p,
/// computed from truth tables by pairwise comparison.
std::vector<edge> hasse_edges(int p, bool long_mode = false);

/// Dedekind numbers M(1..9).
std::vector<big_int> dedekind_numbers();

struct count_row {
  int p = 0;
  big_int M;
  big_int N;
  std::optional<std::uint64_t> enumerated;
};

/// N(p) from the recurrence N(p) = M(p) - 2 - sum_k C(p,k) N(k), cross-checked
/// against enumeration where it is enabled. Throws `integrity` on mismatch.
std::vector<count_row> count_table(int max_p, std::span<const big_int> m_values,
                                   bool long_mode = false);

void write_csv(std::ostream& os, std::span<const count_row> rows);

}  // namespace monolat::oracle
