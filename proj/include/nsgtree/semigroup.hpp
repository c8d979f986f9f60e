#pragma once

#include <cstdint>
#include <vector>

#include "nsgtree/bitvec.hpp"
#include "nsgtree/errors.hpp"

namespace nsgtree {

// Apery set of a semigroup with respect to a nonzero member n: for each
// residue class i mod n, the least member congruent to i. least[0] == 0.
struct AperySet {
  std::uint32_t modulus = 0;
  std::vector<std::uint64_t> least;

  // Membership through the Apery set: s belongs to the semigroup iff the
  // least member in its residue class does not exceed s.
  bool contains(std::uint64_t s) const { return least[s % modulus] <= s; }
};

// A numerical semigroup, stored as its Frobenius number F plus membership
// flags for 0..F; every integer above F is a member. Immutable after
// construction, so values can be shared freely across threads.
class NumericalSemigroup {
 public:
  // Additive closure of the given generators. Requires gcd 1 and 1 absent
  // (otherwise the closure is all of N and has no Frobenius number).
  static NumericalSemigroup from_generators(const std::vector<std::uint32_t>& gens);

  // Semigroup whose gap set is exactly `gaps`. The complement must be
  // closed under addition and `frobenius` must be listed as a gap.
  static NumericalSemigroup from_gaps(std::uint32_t frobenius,
                                      const std::vector<std::uint32_t>& gaps);

  std::uint32_t frobenius() const { return frobenius_; }
  std::uint32_t multiplicity() const;
  std::uint32_t genus() const;
  bool contains(std::int64_t s) const;
  std::vector<std::uint32_t> gaps() const;

  // Members not expressible as a sum of two smaller nonzero members.
  // Candidates above F + multiplicity are sums by construction, so the
  // search window [m, F + m] is exhaustive.
  std::vector<std::uint32_t> minimal_generators() const;

  AperySet apery_set(std::uint32_t n) const;
  std::vector<std::uint32_t> pseudo_frobenius() const;
  std::vector<std::uint32_t> special_gaps() const;

  bool is_symmetric() const;
  bool is_pseudo_symmetric() const;
  bool is_irreducible() const;

  // Gap-mirror forms of the symmetry predicates (every gap x pairs with a
  // member F - x, modulo the F/2 exception in the even case). Redundant
  // with the genus forms; kept as an independent verification route.
  bool is_symmetric_by_mirror() const;
  bool is_pseudo_symmetric_by_mirror() const;

  // S \ {x} for a minimal generator x. The Frobenius number becomes x when
  // x > F and is unchanged otherwise.
  NumericalSemigroup remove_minimal_generator(std::uint32_t x) const;

  const BitVec& member_bits() const { return members_; }

  bool operator==(const NumericalSemigroup&) const = default;

 private:
  NumericalSemigroup(std::uint32_t frobenius, BitVec members)
      : frobenius_(frobenius), members_(std::move(members)) {}

  std::uint32_t frobenius_ = 0;
  BitVec members_;  // flags for 0..F
};

// Selmer's formulas evaluated on Ap(S, n); agree with genus()/frobenius()
// for every nonzero member n.
std::uint64_t genus_via_selmer(const NumericalSemigroup& s, std::uint32_t n);
std::uint64_t frobenius_via_apery(const NumericalSemigroup& s, std::uint32_t n);

// Strict ordering by gap set (lexicographic as increasing sequences);
// distinct semigroups with the same Frobenius number always compare.
bool gap_lex_less(const NumericalSemigroup& a, const NumericalSemigroup& b);

}  // namespace nsgtree
