#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "monolat/clause.hpp"

namespace monolat {

/// A non-degenerate monotone positive Boolean function, held as the antichain
/// cover of {1..p} formed by the index sets of its prime implicants.
///
/// Clauses are kept sorted in canonical order, so equality, ordering and
/// hashing are structural. Values are immutable once built.
class function_rep {
 public:
  /// Validates the antichain and cover invariants and throws `error` naming
  /// the violated one.
  function_rep(std::vector<clause> clauses, int p);
  function_rep(std::initializer_list<std::initializer_list<int>> clauses, int p);

  static function_rep from_masks(std::vector<mask_t> masks, int p);

  /// Skips validation; the caller guarantees a non-empty antichain cover.
  static function_rep from_masks_unchecked(std::vector<mask_t> masks, int p);

  static function_rep infimum(int p);
  static function_rep supremum(int p);

  int dimension() const noexcept { return p_; }
  std::size_t size() const noexcept { return masks_.size(); }
  std::span<const mask_t> masks() const noexcept { return masks_; }
  std::vector<clause> clauses() const;

  bool is_infimum() const noexcept;
  bool is_supremum() const noexcept;

  /// Set syntax, e.g. "{1},{2,3}".
  std::string to_string() const;

  friend bool operator==(const function_rep&, const function_rep&) = default;
  friend std::strong_ordering operator<=>(const function_rep& a, const function_rep& b) noexcept;

 private:
  function_rep() = default;
  static void canonicalize(std::vector<mask_t>& masks);

  std::vector<mask_t> masks_;
  int p_ = 0;
};

/// Witness order: every clause of `lower` has a subset among the clauses of
/// `upper`. Equivalent to inclusion of True sets.
bool precedes(const function_rep& lower, const function_rep& upper);

}  // namespace monolat

template <>
struct std::hash<monolat::function_rep> {
  std::size_t operator()(const monolat::function_rep& f) const noexcept;
};
