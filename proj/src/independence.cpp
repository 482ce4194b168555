#include "monolat/independence.hpp"

#include <algorithm>
#include <limits>

#include "monolat/error.hpp"

namespace monolat {

namespace {

// MMCS-style search (Murakami & Uno): grow a partial transversal one element
// at a time, branching on the uncovered edge with fewest candidates, and prune
// as soon as some chosen element loses its last critical edge.
class transversal_search {
 public:
  explicit transversal_search(std::span<const mask_t> edges) : edges_(edges) {}

  std::vector<mask_t> run(int p) {
    out_.clear();
    extend(0, full_mask(p));
    return std::move(out_);
  }

 private:
  bool every_element_critical(mask_t hit) const {
    mask_t critical = 0;
    for (mask_t e : edges_) {
      const mask_t inter = e & hit;
      if (inter != 0 && (inter & (inter - 1)) == 0) critical |= inter;
    }
    return critical == hit;
  }

  void extend(mask_t hit, mask_t cand) {
    int best = -1;
    int best_count = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i] & hit) continue;
      const int c = popcount(edges_[i] & cand);
      if (c == 0) return;
      if (c < best_count) {
        best_count = c;
        best = static_cast<int>(i);
      }
    }
    if (best < 0) {
      out_.push_back(hit);
      return;
    }
    const mask_t branch = edges_[best] & cand;
    cand &= ~branch;
    for (mask_t rest = branch; rest; rest &= rest - 1) {
      const mask_t v = rest & -rest;
      const mask_t next = hit | v;
      if (every_element_critical(next)) extend(next, cand);
      cand |= v;
    }
  }

  std::span<const mask_t> edges_;
  std::vector<mask_t> out_;
};

std::vector<clause> to_clauses(const std::vector<mask_t>& masks, int p) {
  std::vector<clause> out;
  out.reserve(masks.size());
  for (mask_t m : masks) out.emplace_back(m, p);
  return out;
}

}  // namespace

std::vector<mask_t> minimal_transversals(std::span<const mask_t> edges, int p) {
  check_dimension(p);
  for (mask_t e : edges)
    if (e == 0) throw error(error_code::empty_clause, "hypergraph edge must not be empty");
  auto out = transversal_search(edges).run(p);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<mask_t> maximal_independent_masks(const function_rep& f) {
  // A set contains no clause iff its complement meets every clause, so the
  // maximal clause-free sets are complements of minimal transversals.
  const mask_t full = full_mask(f.dimension());
  const auto clauses = f.masks();
  std::vector<mask_t> out;
  for (mask_t t : minimal_transversals(clauses, f.dimension())) {
    const mask_t sigma = full & ~t;
    if (sigma == 0) continue;
    const bool dominated = std::any_of(clauses.begin(), clauses.end(),
                                       [sigma](mask_t s) { return is_subset(sigma, s); });
    if (!dominated) out.push_back(sigma);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<clause> maximal_independent(const function_rep& f) {
  return to_clauses(maximal_independent_masks(f), f.dimension());
}

std::vector<mask_t> maximal_dominated_masks(const function_rep& f) {
  const auto clauses = f.masks();
  std::vector<mask_t> candidates;
  for (mask_t s : clauses)
    for (mask_t rest = s; rest; rest &= rest - 1) {
      const mask_t reduced = s & ~(rest & -rest);
      if (reduced != 0) candidates.push_back(reduced);
    }
  std::sort(candidates.begin(), candidates.end(), canonical_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // c is strictly below another candidate iff some clause holding c has at
  // least two extra elements.
  std::vector<mask_t> out;
  for (mask_t c : candidates) {
    const int size = popcount(c);
    const bool below = std::any_of(clauses.begin(), clauses.end(), [&](mask_t s) {
      return is_subset(c, s) && popcount(s) > size + 1;
    });
    if (!below) out.push_back(c);
  }
  return out;
}

std::vector<clause> maximal_dominated(const function_rep& f) {
  return to_clauses(maximal_dominated_masks(f), f.dimension());
}

}  // namespace monolat
