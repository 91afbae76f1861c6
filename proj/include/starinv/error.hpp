#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace starinv {

enum class Errc {
  ring_mismatch,
  dimension_mismatch,
  idempotent_violation,
  corner_violation,
  not_mp_invertible,
  not_inner_inverse,
  not_a_1mp_inverse,
  not_an_mp1_inverse,
  not_partial_isometry,
  not_rickart,
  not_regular,
  order_violation,
  uniqueness_violation,
  unknown_theorem,
  unknown_ring,
  parse_error,
  internal_error,
};

std::string_view errc_name(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Postcondition failures indicate a bug, never a mathematical outcome.
[[noreturn]] inline void internal_failure(const std::string& what) {
  throw Error(Errc::internal_error, "internal check failed: " + what);
}

}  // namespace starinv
