#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsgtree/bitvec.hpp"
#include "nsgtree/errors.hpp"
#include "nsgtree/semigroup.hpp"

namespace nsgtree {

// First problem found by validate_kunz: either the final coordinate is not
// 1 (the Frobenius number must be a gap) or the coordinates violate
// closure, witnessed by the lexicographically first pair (i, j) with
// x_i = x_j = 0 but x_{i+j} = 1.
struct KunzViolation {
  enum class Kind { frobenius_not_gap, closure } kind;
  std::uint32_t i = 0;
  std::uint32_t j = 0;
};

// Kunz-coordinates vector of a numerical semigroup with respect to F + 1:
// a 0/1 vector indexed 1..F whose i-th entry flags whether i is a gap.
// Stored packed; bit 0 of the underlying vector is unused and zero.
class KunzVector {
 public:
  // Coordinates of the unique irreducible semigroup with Frobenius number
  // F whose minimal generators all exceed F/2: ceil((F+1)/2) - 1 leading
  // ones, zeros, then a final one.
  static KunzVector root(std::uint32_t frobenius);

  static KunzVector encode(const NumericalSemigroup& s);

  // Validating constructor from raw coordinates (bits[k] is x_{k+1}).
  static KunzVector from_bits(const std::vector<std::uint8_t>& bits);

  NumericalSemigroup decode() const;

  std::uint32_t frobenius() const { return frobenius_; }
  bool bit(std::uint32_t i) const;  // x_i for i in 1..F
  std::vector<std::uint8_t> bits() const;

  std::uint32_t genus() const;         // sum of the coordinates
  std::uint32_t multiplicity() const;  // least i with x_i = 0, else F + 1
  std::vector<std::uint32_t> gaps() const;

  // Gaps h with S_x united with {h} still a semigroup, read off from the
  // coordinates alone: x_h = 1, no member j <= F - h with h + j a gap, and
  // x_{2h} = 0 whenever 2h <= F.
  std::vector<std::uint32_t> special_gaps() const;
  bool is_irreducible() const;  // exactly one special gap

  // n is a member and no two nonzero members sum to it.
  bool is_minimal_generator(std::uint32_t n) const;

  // x + e_n - e_{F-n}: swaps a zero at n with a one at F - n. Preserves the
  // coordinate sum, hence the genus.
  KunzVector apply_swap(std::uint32_t n) const;

  const BitVec& raw_bits() const { return x_; }

  bool operator==(const KunzVector&) const = default;

 private:
  KunzVector(std::uint32_t frobenius, BitVec x)
      : frobenius_(frobenius), x_(std::move(x)) {}

  std::uint32_t frobenius_ = 0;
  BitVec x_;  // size F + 1, index 0 unused
};

// Checks length-F raw coordinates: values 0/1, x_F = 1, and closure
// (x_i = 0 and x_j = 0 with i + j <= F force x_{i+j} = 0). Returns the
// first problem, or nullopt when the vector is a valid Kunz vector.
std::optional<KunzViolation> validate_kunz(const std::vector<std::uint8_t>& bits,
                                           std::uint32_t frobenius);

namespace detail {
// Zero positions of x over 1..F (the members below F + 1), and the same
// mask reversed so that reversed[k] = zeros[F - k]. Both are used by the
// word-parallel minimal-generator scan.
BitVec member_mask(const KunzVector& x);
bool is_min_gen_masked(const BitVec& zeros, const BitVec& zeros_rev,
                       std::uint32_t frobenius, std::uint32_t n);
}  // namespace detail

}  // namespace nsgtree
