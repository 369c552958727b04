#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bittp {

enum class Errc {
  missing_header_field,
  malformed_record,
  item_at_depot,
  inconsistent_counts,
  unknown_edge_weight_type,
  invalid_instance,
  invalid_tour,
  invalid_plan,
  index_out_of_range,
  weight_out_of_range,
  position_out_of_range,
  alpha_out_of_range,
  all_zero_exponents,
  empty_archive,
  ref_point_dominated,
  invalid_config,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Instance reader failure tied to a line of the input (1-based, 0 if unknown).
class ParseError : public Error {
 public:
  ParseError(Errc code, std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace bittp
