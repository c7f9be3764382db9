#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace noether {

enum class errc {
  singular,
  shape_mismatch,
  space_mismatch,
  out_of_range,
  not_invertible,
  unrepresentable,
  no_cut_found,
  degenerate_external,
  not_a_parametrix,
  projector_defect,
  not_locally_constant,
  singular_s,
  not_unitary,
  input_parse,
  io,
};

std::string_view to_string(errc code) noexcept;

// Single exception type for the library; callers dispatch on code().
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace noether
