#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsgtree {

enum class Errc {
  empty_input,
  gcd_not_one,
  no_gaps,
  not_closed,
  frobenius_missing,
  not_a_member,
  not_minimal_generator,
  bad_swap,
  precondition_failed,
  not_irreducible,
  invalid_frobenius,
  too_large,
  invalid_input,
  parse_error,
};

// Library error. `detail_a`/`detail_b` carry per-code payloads:
// the witnessing pair (a, b) for not_closed, the violated condition
// number for precondition_failed.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::uint64_t detail_a = 0,
        std::uint64_t detail_b = 0)
      : std::runtime_error(message), code_(code), a_(detail_a), b_(detail_b) {}

  Errc code() const noexcept { return code_; }
  std::uint64_t detail_a() const noexcept { return a_; }
  std::uint64_t detail_b() const noexcept { return b_; }

 private:
  Errc code_;
  std::uint64_t a_;
  std::uint64_t b_;
};

}  // namespace nsgtree
