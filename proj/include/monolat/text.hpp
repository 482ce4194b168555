#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "monolat/error.hpp"
#include "monolat/function_rep.hpp"

namespace monolat {

enum class sign : char { positive = '+', negative = '-' };

/// Per-variable regulation sign. Only affects how a function is written: the
/// lattice position of a function never depends on it.
class sign_structure {
 public:
  explicit sign_structure(std::vector<sign> signs);
  static sign_structure all_positive(int p);
  /// "++-" or "+,+,-".
  static sign_structure parse(std::string_view text, int p);

  int size() const noexcept { return static_cast<int>(signs_.size()); }
  sign operator[](int variable) const { return signs_.at(variable - 1); }
  bool all_positive() const noexcept;
  std::string to_string() const;

  friend bool operator==(const sign_structure&, const sign_structure&) = default;

 private:
  std::vector<sign> signs_;
};

class parse_error : public error {
 public:
  parse_error(error_code code, std::size_t position, const std::string& message)
      : error(code, message + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

struct parsed_function {
  function_rep function;
  sign_structure signs;
};

/// Accepts set syntax `{1},{2,3}` (optionally wrapped in outer braces; `-k`
/// marks variable k as negative) or expression syntax `x1 | x2 & !x3` with
/// precedence ! > & > |, parentheses and free whitespace. Expressions must
/// already be disjunctions of conjunctions of literals.
parsed_function parse_function(std::string_view text, int p);

enum class text_style { sets, expr };

text_style parse_text_style(std::string_view name);

std::string render_function(const function_rep& f, const sign_structure& signs, text_style style);

}  // namespace monolat
