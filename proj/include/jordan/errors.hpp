#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jordan {

enum class Errc {
  cap_exceeded,
  invalid_table,
  not_normal,
  prime_does_not_divide,
  modulus_mismatch,
  odd_modulus,
  non_integral_input,
  det_not_one,
  not_central,
  quotient_not_abelian,
  hypothesis_violation,
  index_exceeds_six,
  zero_area,
  prime_too_small,
  lambda_too_small,
  parse_error,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace jordan
