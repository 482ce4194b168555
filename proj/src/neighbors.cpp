#include "monolat/neighbors.hpp"

#include <algorithm>
#include <map>

#include "monolat/independence.hpp"

namespace monolat {

std::string_view to_string(rule r) noexcept {
  switch (r) {
    case rule::r1: return "R1";
    case rule::r2: return "R2";
    case rule::r3: return "R3";
  }
  return "?";
}

std::string_view to_string(direction d) noexcept {
  return d == direction::parent ? "parent" : "child";
}

int rule_delta(rule r, direction d) noexcept {
  const int magnitude = r == rule::r3 ? 2 : 1;
  return d == direction::parent ? magnitude : -magnitude;
}

namespace {

using mask_list = std::vector<mask_t>;

bool covers(const mask_list& masks, int p) {
  mask_t all = 0;
  for (mask_t m : masks) all |= m;
  return all == full_mask(p);
}

mask_list without(std::span<const mask_t> masks, mask_t drop) {
  mask_list out;
  out.reserve(masks.size() + 2);
  for (mask_t m : masks)
    if (m != drop) out.push_back(m);
  return out;
}

class collector {
 public:
  collector(int p, direction d) : p_(p), dir_(d) {}

  void add(mask_list masks, rule r) {
    out_.push_back({function_rep::from_masks_unchecked(std::move(masks), p_), r, dir_});
  }

  std::vector<neighbor_result> finish() && {
    std::sort(out_.begin(), out_.end(), [](const auto& a, const auto& b) {
      if (auto c = a.neighbor <=> b.neighbor; c != 0) return c < 0;
      return a.produced_by < b.produced_by;
    });
    out_.erase(std::unique(out_.begin(), out_.end(),
                           [](const auto& a, const auto& b) { return a.neighbor == b.neighbor; }),
               out_.end());
    return std::move(out_);
  }

 private:
  int p_;
  direction dir_;
  std::vector<neighbor_result> out_;
};

}  // namespace

std::vector<neighbor_result> immediate_parents(const function_rep& f) {
  const int p = f.dimension();
  const auto clauses = f.masks();
  collector out(p, direction::parent);

  const auto independent = maximal_independent_masks(f);
  for (mask_t c : independent) {
    mask_list next(clauses.begin(), clauses.end());
    next.push_back(c);
    out.add(std::move(next), rule::r1);
  }

  // Dominated candidates inside some maximal independent set cannot yield an
  // immediate parent.
  auto dominated = maximal_dominated_masks(f);
  std::erase_if(dominated, [&](mask_t d) {
    return std::any_of(independent.begin(), independent.end(),
                       [d](mask_t c) { return is_subset(d, c); });
  });

  // clause index -> dominated candidates it contains that failed to cover alone
  std::map<std::size_t, mask_list> unused;
  for (mask_t d : dominated) {
    mask_list next;
    std::vector<std::size_t> containing;
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      if (is_subset(d, clauses[i]))
        containing.push_back(i);
      else
        next.push_back(clauses[i]);
    }
    next.push_back(d);
    if (covers(next, p)) {
      out.add(std::move(next), rule::r2);
    } else {
      for (auto i : containing) unused[i].push_back(d);
    }
  }

  for (const auto& [i, candidates] : unused) {
    for (std::size_t a = 0; a + 1 < candidates.size(); ++a)
      for (std::size_t b = a + 1; b < candidates.size(); ++b) {
        auto next = without(clauses, clauses[i]);
        next.push_back(candidates[a]);
        next.push_back(candidates[b]);
        out.add(std::move(next), rule::r3);
      }
  }
  return std::move(out).finish();
}

std::vector<neighbor_result> immediate_children(const function_rep& f) {
  const int p = f.dimension();
  const auto clauses = f.masks();
  const mask_t full = full_mask(p);
  collector out(p, direction::child);

  auto count_within = [](std::span<const mask_t> set, mask_t bound) {
    return std::count_if(set.begin(), set.end(), [bound](mask_t m) { return is_subset(m, bound); });
  };

  std::map<int, mask_list> mergeable;
  for (mask_t s : clauses) {
    bool to_merge = false;
    bool extendable = false;
    auto candidate = without(clauses, s);
    for (mask_t missing = full & ~s; missing; missing &= missing - 1) {
      const mask_t extended = s | (missing & -missing);
      const auto contained = count_within(clauses, extended);
      if (contained == 1) {
        // only s itself lies inside the extension
        extendable = true;
        candidate.push_back(extended);
      }
      if (contained == 2) to_merge = true;
    }
    if (extendable) {
      out.add(std::move(candidate), rule::r2);
    } else if (covers(candidate, p)) {
      out.add(std::move(candidate), rule::r1);
    } else if (to_merge) {
      mergeable[popcount(s)].push_back(s);
    }
  }

  for (auto& [size, group] : mergeable) {
    while (!group.empty()) {
      const mask_t s = group.front();
      for (mask_t missing = full & ~s; missing; missing &= missing - 1) {
        const mask_t merged = s | (missing & -missing);
        mask_list absorbed;
        for (mask_t g : group)
          if (is_subset(g, merged)) absorbed.push_back(g);
        if (absorbed.size() == 2) {
          mask_list next;
          for (mask_t c : clauses)
            if (c != absorbed[0] && c != absorbed[1]) next.push_back(c);
          next.push_back(merged);
          out.add(std::move(next), rule::r3);
        }
      }
      group.erase(group.begin());
    }
  }
  return std::move(out).finish();
}

std::vector<neighbor_result> immediate_neighbors(const function_rep& f, direction d) {
  return d == direction::parent ? immediate_parents(f) : immediate_children(f);
}

}  // namespace monolat
