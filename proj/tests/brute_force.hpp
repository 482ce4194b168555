#pragma once

// Exhaustive reference computations used only by the tests. Everything here
// works over explicit subsets and states, sharing no code with the library's
// algorithms beyond the clause mask encoding.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "monolat/function_rep.hpp"

namespace brute {

using monolat::mask_t;

inline bool subset(mask_t a, mask_t b) { return (a & ~b) == 0; }

inline std::vector<mask_t> sorted(std::vector<mask_t> v) {
  std::sort(v.begin(), v.end(), monolat::canonical_less);
  return v;
}

inline std::vector<mask_t> maximal(const std::vector<mask_t>& family) {
  std::vector<mask_t> out;
  for (mask_t a : family) {
    bool is_max = true;
    for (mask_t b : family)
      if (a != b && subset(a, b)) is_max = false;
    if (is_max) out.push_back(a);
  }
  return sorted(out);
}

/// Sets incomparable to every clause, then the inclusion-maximal ones.
inline std::vector<mask_t> maximal_independent(const monolat::function_rep& f) {
  std::vector<mask_t> independent;
  const mask_t n = mask_t{1} << f.dimension();
  for (mask_t s = 1; s < n; ++s) {
    bool ok = true;
    for (mask_t c : f.masks())
      if (subset(s, c) || subset(c, s)) ok = false;
    if (ok) independent.push_back(s);
  }
  return maximal(independent);
}

/// Non-empty strict subsets of clauses, then the inclusion-maximal ones.
inline std::vector<mask_t> maximal_dominated(const monolat::function_rep& f) {
  std::vector<mask_t> dominated;
  const mask_t n = mask_t{1} << f.dimension();
  for (mask_t s = 1; s < n; ++s)
    for (mask_t c : f.masks())
      if (s != c && subset(s, c)) {
        dominated.push_back(s);
        break;
      }
  return maximal(dominated);
}

inline std::uint64_t true_count(const monolat::function_rep& f) {
  std::uint64_t n = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << f.dimension()); ++x)
    for (mask_t c : f.masks())
      if (subset(c, x)) {
        ++n;
        break;
      }
  return n;
}

inline bool true_at(const monolat::function_rep& f, std::uint64_t x) {
  for (mask_t c : f.masks())
    if (subset(c, x)) return true;
  return false;
}

}  // namespace brute
