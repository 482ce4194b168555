#include "monolat/oracle.hpp"

#include <algorithm>
#include <array>

#include "monolat/error.hpp"

namespace monolat::oracle {

namespace {

void require_cap(int p, int cap, const char* what) {
  check_dimension(p);
  if (p > cap)
    throw error(error_code::capability_exceeded,
                std::string(what) + " is limited to p <= " + std::to_string(cap) + ", got p=" +
                    std::to_string(p));
}

// Depth-first over non-empty subsets of {1..p} (p <= 6, so each subset is a
// bit position in one word). A subset joins the antichain only if it is
// incomparable with everything chosen so far.
class antichain_walk {
 public:
  antichain_walk(int p, const std::function<void(std::span<const mask_t>)>& visit)
      : p_(p), visit_(visit) {
    const mask_t n = mask_t{1} << p;
    for (mask_t a = 1; a < n; ++a)
      for (mask_t b = 1; b < n; ++b)
        if (is_subset(a, b) || is_subset(b, a)) comparable_[a] |= mask_t{1} << b;
  }

  std::uint64_t run() {
    const mask_t n = mask_t{1} << p_;
    const mask_t all_subsets = (p_ == 6 ? ~mask_t{0} : (mask_t{1} << n) - 1) & ~mask_t{1};
    extend(all_subsets, 0);
    return count_;
  }

 private:
  void extend(mask_t cand, mask_t uni) {
    if (!chosen_.empty() && uni == full_mask(p_)) {
      sorted_ = chosen_;
      std::sort(sorted_.begin(), sorted_.end(), canonical_less);
      visit_(sorted_);
      ++count_;
    }
    while (cand) {
      const int b = std::countr_zero(cand);
      cand &= cand - 1;
      chosen_.push_back(static_cast<mask_t>(b));
      extend(cand & ~comparable_[b], uni | static_cast<mask_t>(b));
      chosen_.pop_back();
    }
  }

  int p_;
  const std::function<void(std::span<const mask_t>)>& visit_;
  std::array<mask_t, 64> comparable_{};
  std::vector<mask_t> chosen_;
  std::vector<mask_t> sorted_;
  std::uint64_t count_ = 0;
};

big_int binomial(int n, int k) {
  big_int r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::uint64_t for_each_function(int p, bool long_mode,
                                const std::function<void(std::span<const mask_t>)>& visit) {
  require_cap(p, long_mode ? enumeration_cap_long : enumeration_cap, "enumeration");
  return antichain_walk(p, visit).run();
}

std::vector<function_rep> enumerate_all(int p, bool long_mode) {
  std::vector<function_rep> out;
  for_each_function(p, long_mode, [&](std::span<const mask_t> masks) {
    out.push_back(function_rep::from_masks({masks.begin(), masks.end()}, p));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t table_word(std::span<const mask_t> clauses, int p) {
  require_cap(p, 6, "truth-table words");
  std::uint64_t word = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << p); ++x)
    for (mask_t s : clauses)
      if ((s & x) == s) {
        word |= std::uint64_t{1} << x;
        break;
      }
  return word;
}

std::vector<edge> hasse_edges(int p, bool long_mode) {
  require_cap(p, long_mode ? hasse_cap_long : hasse_cap, "Hasse diagram");
  const auto all = enumerate_all(p, long_mode);
  const std::size_t n = all.size();
  std::vector<std::uint64_t> table(n);
  for (std::size_t i = 0; i < n; ++i) table[i] = table_word(all[i].masks(), p);

  // strictly_above[i] is a bitset over functions whose True set strictly
  // contains that of i; covers are the members not above another member.
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> above(n * words, 0);
  auto row = [&](std::size_t i) { return above.data() + i * words; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (table[i] & ~table[j]) == 0) row(i)[j / 64] |= std::uint64_t{1} << (j % 64);

  std::vector<edge> edges;
  std::vector<std::uint64_t> blocked(words);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(blocked.begin(), blocked.end(), 0);
    const auto* up = row(i);
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t bits = up[w]; bits; bits &= bits - 1) {
        const std::size_t j = w * 64 + std::countr_zero(bits);
        const auto* up_j = row(j);
        for (std::size_t k = 0; k < words; ++k) blocked[k] |= up_j[k];
      }
    for (std::size_t w = 0; w < words; ++w)
      for (std::uint64_t bits = up[w] & ~blocked[w]; bits; bits &= bits - 1)
        edges.emplace_back(all[i], all[w * 64 + std::countr_zero(bits)]);
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<big_int> dedekind_numbers() {
  return {
      big_int("3"),
      big_int("6"),
      big_int("20"),
      big_int("168"),
      big_int("7581"),
      big_int("7828354"),
      big_int("2414682040998"),
      big_int("56130437228687557907788"),
      big_int("286386577668298411128469151667598498812366"),
  };
}

std::vector<count_row> count_table(int max_p, std::span<const big_int> m_values, bool long_mode) {
  if (max_p < 1)
    throw error(error_code::invalid_argument, "max p must be at least 1");
  if (static_cast<int>(m_values.size()) < max_p)
    throw error(error_code::capability_exceeded,
                "Dedekind numbers known only up to p=" + std::to_string(m_values.size()));
  const int enum_cap = long_mode ? enumeration_cap_long : enumeration_cap;
  std::vector<count_row> rows;
  for (int p = 1; p <= max_p; ++p) {
    count_row row;
    row.p = p;
    row.M = m_values[p - 1];
    row.N = row.M - 2;
    for (int k = 1; k < p; ++k) row.N -= binomial(p, k) * rows[k - 1].N;
    if (p <= enum_cap) {
      row.enumerated = for_each_function(p, long_mode, [](std::span<const mask_t>) {});
      if (big_int(*row.enumerated) != row.N)
        throw error(error_code::integrity,
                    "p=" + std::to_string(p) + ": recurrence gives " + row.N.str() +
                        " but enumeration found " + std::to_string(*row.enumerated));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_csv(std::ostream& os, std::span<const count_row> rows) {
  os << "p,M,N,enumerated\n";
  for (const auto& r : rows) {
    os << r.p << ',' << r.M << ',' << r.N << ',';
    if (r.enumerated) os << *r.enumerated;
    os << '\n';
  }
}

}  // namespace monolat::oracle
