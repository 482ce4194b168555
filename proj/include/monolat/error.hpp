#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace monolat {

enum class error_code {
  dimension_mismatch,
  invalid_dimension,
  empty_clause,
  index_out_of_range,
  non_antichain,
  non_cover,
  empty_function,
  syntax_error,
  mixed_sign,
  not_dnf,
  non_monotone,
  degenerate,
  capability_exceeded,
  integrity,
  invalid_argument,
};

// Coarse classes drive CLI exit codes and HTTP statuses.
enum class error_class { usage, validation, capability };

std::string_view to_string(error_code code) noexcept;
error_class classify(error_code code) noexcept;

class error : public std::runtime_error {
 public:
  error(error_code code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  error_code code() const noexcept { return code_; }

 private:
  error_code code_;
};

}  // namespace monolat
