#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monolat {

/// Largest supported number of variables: one clause is one machine word.
inline constexpr int max_dimension = 64;

/// Bit pattern of a subset of {1..p}; index i lives in bit i-1.
using mask_t = std::uint64_t;

constexpr mask_t bit_of(int index) noexcept { return mask_t{1} << (index - 1); }

constexpr mask_t full_mask(int p) noexcept {
  return p >= 64 ? ~mask_t{0} : (mask_t{1} << p) - 1;
}

constexpr int popcount(mask_t m) noexcept { return std::popcount(m); }

constexpr bool is_subset(mask_t a, mask_t b) noexcept { return (a & ~b) == 0; }

constexpr bool is_strict_subset(mask_t a, mask_t b) noexcept {
  return a != b && is_subset(a, b);
}

/// Canonical clause order: cardinality first, then numeric bit pattern.
constexpr bool canonical_less(mask_t a, mask_t b) noexcept {
  const int ca = popcount(a), cb = popcount(b);
  return ca != cb ? ca < cb : a < b;
}

void check_dimension(int p);

/// A non-empty subset of {1..p}, i.e. the index set of one prime implicant.
class clause {
 public:
  clause(mask_t bits, int dimension);
  clause(std::initializer_list<int> indices, int dimension);
  static clause from_indices(std::span<const int> indices, int dimension);

  mask_t bits() const noexcept { return bits_; }
  int dimension() const noexcept { return dimension_; }
  int size() const noexcept { return popcount(bits_); }
  bool contains(int index) const noexcept {
    return index >= 1 && index <= dimension_ && (bits_ & bit_of(index)) != 0;
  }
  bool subset_of(const clause& other) const noexcept { return is_subset(bits_, other.bits_); }

  std::vector<int> indices() const;
  std::string to_string() const;

  friend bool operator==(const clause&, const clause&) = default;
  friend std::strong_ordering operator<=>(const clause& a, const clause& b) noexcept {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (auto c = a.bits_ <=> b.bits_; c != 0) return c;
    return a.dimension_ <=> b.dimension_;
  }

 private:
  mask_t bits_;
  int dimension_;
};

std::vector<int> indices_of(mask_t bits);

/// True iff no clause is contained in another distinct clause.
bool is_antichain(std::span<const clause> clauses);

/// True iff the union of the clauses is exactly {1..p}.
bool is_cover(std::span<const clause> clauses, int p);

}  // namespace monolat
