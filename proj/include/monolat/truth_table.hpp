#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monolat/function_rep.hpp"

namespace monolat {

/// Largest p for which truth tables are materialised and True sets are
/// counted by direct enumeration.
inline constexpr int default_exact_cap = 24;

/// Packed table of 2^p output bits. State x is an integer whose bit i-1 is x_i.
class truth_table {
 public:
  explicit truth_table(int p);
  /// `bits[k]` is '0' or '1', the output at state k; length must be 2^p.
  static truth_table from_string(const std::string& bits, int p);

  int dimension() const noexcept { return p_; }
  std::uint64_t states() const noexcept { return std::uint64_t{1} << p_; }

  bool operator[](std::uint64_t state) const noexcept {
    return (words_[state >> 6] >> (state & 63)) & 1u;
  }
  void set(std::uint64_t state, bool value) noexcept;

  std::uint64_t count() const noexcept;
  std::string to_string() const;

  friend bool operator==(const truth_table&, const truth_table&) = default;

 private:
  int p_;
  std::vector<std::uint64_t> words_;
};

/// Per-variable findings. `witness_low` has x_i = 0 and `witness_high` is the
/// same state with x_i = 1. For a non-positive variable the pair shows
/// f(low) = 1 > f(high) = 0; for an inessential one it is the first pair
/// examined, where f(low) = f(high).
struct variable_report {
  int variable = 0;
  bool positive = true;
  bool essential = false;
  std::optional<std::uint64_t> witness_low;
  std::optional<std::uint64_t> witness_high;
};

struct validation_report {
  std::vector<variable_report> variables;
  bool pass = false;

  /// First failing property, if any: "non-monotone" or "degenerate".
  std::optional<std::string> violated_property() const;
  std::string summary() const;
};

validation_report check_monotone_nondegenerate(const truth_table& t);

/// Number of states where `f` is true. Direct enumeration up to `exact_cap`
/// variables, inclusion-exclusion over clause unions beyond it (at most
/// `max_ie_clauses` clauses). Throws `capability_exceeded` otherwise.
std::uint64_t true_set_size(const function_rep& f, int exact_cap = default_exact_cap,
                            int max_ie_clauses = 20);

truth_table to_truth_table(const function_rep& f, int exact_cap = default_exact_cap);

/// Recovers the prime implicants of a positive, non-degenerate table. Throws
/// `non_monotone` or `degenerate` naming the variable and a witness pair.
function_rep from_truth_table(const truth_table& t);

std::string state_text(std::uint64_t state, int p);

}  // namespace monolat
