#include "monolat/truth_table.hpp"

#include <bit>

#include "monolat/error.hpp"

namespace monolat {

namespace {

void check_exact(int p, int exact_cap) {
  if (p > exact_cap)
    throw error(error_code::capability_exceeded,
                "p=" + std::to_string(p) + " exceeds the exact-mode cap of " +
                    std::to_string(exact_cap));
}

// Marks every state that contains some clause (the up-closure of the clauses).
std::vector<std::uint8_t> true_states(const function_rep& f) {
  const int p = f.dimension();
  std::vector<std::uint8_t> value(std::size_t{1} << p, 0);
  for (mask_t m : f.masks()) value[m] = 1;
  for (int i = 0; i < p; ++i) {
    const std::size_t b = std::size_t{1} << i;
    for (std::size_t x = 0; x < value.size(); ++x)
      if (x & b) value[x] |= value[x ^ b];
  }
  return value;
}

struct ie_sums {
  unsigned __int128 positive = 0;
  unsigned __int128 negative = 0;
};

// Inclusion-exclusion over subsets of clauses. Once the union is full every
// further extension cancels out, so such branches stop early.
void include_exclude(std::span<const mask_t> clauses, std::size_t next, mask_t uni, int depth,
                     mask_t full, int p, ie_sums& sums) {
  for (std::size_t i = next; i < clauses.size(); ++i) {
    const mask_t u = uni | clauses[i];
    const int d = depth + 1;
    auto& side = (d % 2 == 1) ? sums.positive : sums.negative;
    if (u == full) {
      if (i + 1 == clauses.size()) side += 1;
      continue;
    }
    side += static_cast<unsigned __int128>(1) << (p - popcount(u));
    include_exclude(clauses, i + 1, u, d, full, p, sums);
  }
}

}  // namespace

truth_table::truth_table(int p) : p_(p) {
  check_dimension(p);
  check_exact(p, 32);
  words_.assign(std::max<std::uint64_t>(1, states() / 64), 0);
}

truth_table truth_table::from_string(const std::string& bits, int p) {
  truth_table t(p);
  if (bits.size() != t.states())
    throw error(error_code::invalid_argument,
                "truth table for p=" + std::to_string(p) + " needs " + std::to_string(t.states()) +
                    " entries, got " + std::to_string(bits.size()));
  for (std::uint64_t x = 0; x < t.states(); ++x) {
    if (bits[x] != '0' && bits[x] != '1')
      throw error(error_code::syntax_error,
                  "truth table entry " + std::to_string(x) + " must be 0 or 1");
    t.set(x, bits[x] == '1');
  }
  return t;
}

void truth_table::set(std::uint64_t state, bool value) noexcept {
  const std::uint64_t bit = std::uint64_t{1} << (state & 63);
  if (value)
    words_[state >> 6] |= bit;
  else
    words_[state >> 6] &= ~bit;
}

std::uint64_t truth_table::count() const noexcept {
  std::uint64_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::string truth_table::to_string() const {
  std::string out(states(), '0');
  for (std::uint64_t x = 0; x < states(); ++x)
    if ((*this)[x]) out[x] = '1';
  return out;
}

std::string state_text(std::uint64_t state, int p) {
  std::string out;
  for (int i = 0; i < p; ++i) out += ((state >> i) & 1u) ? '1' : '0';
  return out;
}

std::optional<std::string> validation_report::violated_property() const {
  for (const auto& v : variables)
    if (!v.positive) return "non-monotone";
  for (const auto& v : variables)
    if (!v.essential) return "degenerate";
  return std::nullopt;
}

std::string validation_report::summary() const {
  const int p = static_cast<int>(variables.size());
  for (const auto& v : variables)
    if (!v.positive)
      return "non-monotone in x" + std::to_string(v.variable) + ": f(" +
             state_text(*v.witness_low, p) + ")=1 but f(" + state_text(*v.witness_high, p) + ")=0";
  for (const auto& v : variables)
    if (!v.essential)
      return "degenerate: x" + std::to_string(v.variable) + " is inessential, e.g. f(" +
             state_text(*v.witness_low, p) + ") = f(" + state_text(*v.witness_high, p) + ")";
  return "positive and non-degenerate";
}

validation_report check_monotone_nondegenerate(const truth_table& t) {
  const int p = t.dimension();
  validation_report report;
  report.pass = true;
  for (int i = 1; i <= p; ++i) {
    const std::uint64_t b = std::uint64_t{1} << (i - 1);
    variable_report v;
    v.variable = i;
    std::optional<std::uint64_t> first_low;
    for (std::uint64_t x = 0; x < t.states(); ++x) {
      if (x & b) continue;
      if (!first_low) first_low = x;
      const bool lo = t[x], hi = t[x | b];
      if (lo != hi) v.essential = true;
      if (lo && !hi && v.positive) {
        v.positive = false;
        v.witness_low = x;
        v.witness_high = x | b;
      }
    }
    if (v.positive && !v.essential) {
      v.witness_low = first_low;
      v.witness_high = *first_low | b;
    }
    report.pass = report.pass && v.positive && v.essential;
    report.variables.push_back(v);
  }
  return report;
}

std::uint64_t true_set_size(const function_rep& f, int exact_cap, int max_ie_clauses) {
  const int p = f.dimension();
  if (p <= exact_cap) {
    std::uint64_t n = 0;
    for (auto v : true_states(f)) n += v;
    return n;
  }
  if (static_cast<int>(f.size()) > max_ie_clauses)
    throw error(error_code::capability_exceeded,
                "p=" + std::to_string(p) + " with " + std::to_string(f.size()) +
                    " clauses exceeds the inclusion-exclusion cap of " +
                    std::to_string(max_ie_clauses) + " clauses");
  ie_sums sums;
  include_exclude(f.masks(), 0, 0, 0, full_mask(p), p, sums);
  return static_cast<std::uint64_t>(sums.positive - sums.negative);
}

truth_table to_truth_table(const function_rep& f, int exact_cap) {
  check_exact(f.dimension(), exact_cap);
  truth_table t(f.dimension());
  const auto value = true_states(f);
  for (std::uint64_t x = 0; x < value.size(); ++x)
    if (value[x]) t.set(x, true);
  return t;
}

function_rep from_truth_table(const truth_table& t) {
  const auto report = check_monotone_nondegenerate(t);
  if (auto bad = report.violated_property())
    throw error(*bad == "non-monotone" ? error_code::non_monotone : error_code::degenerate,
                report.summary());
  const int p = t.dimension();
  std::vector<mask_t> minimal;
  for (std::uint64_t x = 0; x < t.states(); ++x) {
    if (!t[x]) continue;
    bool is_min = true;
    for (std::uint64_t rest = x; rest && is_min; rest &= rest - 1)
      if (t[x & ~(rest & -rest)]) is_min = false;
    if (is_min) minimal.push_back(x);
  }
  return function_rep::from_masks(std::move(minimal), p);
}

}  // namespace monolat
