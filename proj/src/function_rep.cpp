#include "monolat/function_rep.hpp"

#include <algorithm>
#include <sstream>

#include "monolat/error.hpp"

namespace monolat {

namespace {

std::string set_text(mask_t m) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int i : indices_of(m)) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

void validate(std::span<const mask_t> masks, int p) {
  check_dimension(p);
  if (masks.empty()) throw error(error_code::empty_function, "function needs at least one clause");
  const mask_t full = full_mask(p);
  mask_t all = 0;
  for (mask_t m : masks) {
    if (m == 0) throw error(error_code::empty_clause, "clause must not be empty");
    if (!is_subset(m, full))
      throw error(error_code::index_out_of_range,
                  "clause " + set_text(m) + " has an index above p=" + std::to_string(p));
    all |= m;
  }
  // masks are canonically sorted, so a subset always precedes its superset
  for (std::size_t i = 0; i < masks.size(); ++i)
    for (std::size_t j = i + 1; j < masks.size(); ++j)
      if (is_subset(masks[i], masks[j]))
        throw error(error_code::non_antichain,
                    masks[i] == masks[j]
                        ? "duplicate clause " + set_text(masks[i])
                        : "non-antichain: " + set_text(masks[i]) + " is contained in " +
                              set_text(masks[j]));
  if (all != full) {
    std::string missing;
    for (int i : indices_of(full & ~all)) missing += (missing.empty() ? "" : ",") + std::to_string(i);
    throw error(error_code::non_cover, "non-cover: indices {" + missing + "} appear in no clause");
  }
}

}  // namespace

void function_rep::canonicalize(std::vector<mask_t>& masks) {
  std::sort(masks.begin(), masks.end(), canonical_less);
}

function_rep::function_rep(std::vector<clause> clauses, int p) {
  check_dimension(p);
  masks_.reserve(clauses.size());
  for (const auto& c : clauses) {
    if (c.dimension() != p)
      throw error(error_code::dimension_mismatch,
                  "clause " + c.to_string() + " has dimension " + std::to_string(c.dimension()) +
                      ", expected " + std::to_string(p));
    masks_.push_back(c.bits());
  }
  canonicalize(masks_);
  validate(masks_, p);
  p_ = p;
}

function_rep::function_rep(std::initializer_list<std::initializer_list<int>> clauses, int p) {
  check_dimension(p);
  for (const auto& c : clauses) masks_.push_back(clause(c, p).bits());
  canonicalize(masks_);
  validate(masks_, p);
  p_ = p;
}

function_rep function_rep::from_masks(std::vector<mask_t> masks, int p) {
  canonicalize(masks);
  validate(masks, p);
  function_rep f;
  f.masks_ = std::move(masks);
  f.p_ = p;
  return f;
}

function_rep function_rep::from_masks_unchecked(std::vector<mask_t> masks, int p) {
  function_rep f;
  canonicalize(masks);
  f.masks_ = std::move(masks);
  f.p_ = p;
  return f;
}

function_rep function_rep::infimum(int p) {
  check_dimension(p);
  return from_masks_unchecked({full_mask(p)}, p);
}

function_rep function_rep::supremum(int p) {
  check_dimension(p);
  std::vector<mask_t> masks;
  for (int i = 1; i <= p; ++i) masks.push_back(bit_of(i));
  return from_masks_unchecked(std::move(masks), p);
}

std::vector<clause> function_rep::clauses() const {
  std::vector<clause> out;
  out.reserve(masks_.size());
  for (mask_t m : masks_) out.emplace_back(m, p_);
  return out;
}

bool function_rep::is_infimum() const noexcept {
  return masks_.size() == 1 && masks_.front() == full_mask(p_);
}

bool function_rep::is_supremum() const noexcept {
  return masks_.size() == static_cast<std::size_t>(p_) && popcount(masks_.back()) == 1;
}

std::string function_rep::to_string() const {
  std::string out;
  for (mask_t m : masks_) {
    if (!out.empty()) out += ',';
    out += set_text(m);
  }
  return out;
}

std::strong_ordering operator<=>(const function_rep& a, const function_rep& b) noexcept {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  const auto n = std::min(a.masks_.size(), b.masks_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const mask_t x = a.masks_[i], y = b.masks_[i];
    if (x == y) continue;
    return canonical_less(x, y) ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.masks_.size() <=> b.masks_.size();
}

bool precedes(const function_rep& lower, const function_rep& upper) {
  if (lower.dimension() != upper.dimension())
    throw error(error_code::dimension_mismatch,
                "cannot compare functions of dimension " + std::to_string(lower.dimension()) +
                    " and " + std::to_string(upper.dimension()));
  for (mask_t s : lower.masks()) {
    const bool witnessed = std::any_of(upper.masks().begin(), upper.masks().end(),
                                       [s](mask_t w) { return is_subset(w, s); });
    if (!witnessed) return false;
  }
  return true;
}

}  // namespace monolat

std::size_t std::hash<monolat::function_rep>::operator()(
    const monolat::function_rep& f) const noexcept {
  // splitmix-style mixing over the canonical clause list
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.dimension());
  for (auto m : f.masks()) {
    h ^= m + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 31));
}
