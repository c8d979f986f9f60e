#include "nsgtree/kunz.hpp"

#include <string>

namespace nsgtree {

KunzVector KunzVector::root(std::uint32_t frobenius) {
  if (frobenius < 1)
    throw Error(Errc::invalid_frobenius, "Frobenius number must be >= 1");
  BitVec x(frobenius + 1);
  const std::uint32_t ones = (frobenius + 2) / 2 - 1;  // ceil((F+1)/2) - 1
  for (std::uint32_t i = 1; i <= ones; ++i) x.set(i);
  x.set(frobenius);
  return KunzVector(frobenius, std::move(x));
}

KunzVector KunzVector::encode(const NumericalSemigroup& s) {
  const std::uint32_t f = s.frobenius();
  BitVec x(f + 1);
  for (std::uint32_t i = 1; i <= f; ++i)
    if (!s.member_bits().test(i)) x.set(i);
  return KunzVector(f, std::move(x));
}

KunzVector KunzVector::from_bits(const std::vector<std::uint8_t>& bits) {
  if (bits.empty()) throw Error(Errc::empty_input, "empty coordinate vector");
  const std::uint32_t f = static_cast<std::uint32_t>(bits.size());
  if (const auto v = validate_kunz(bits, f)) {
    if (v->kind == KunzViolation::Kind::frobenius_not_gap)
      throw Error(Errc::frobenius_missing, "coordinate x_F must be 1");
    throw Error(Errc::not_closed,
                "coordinates violate closure at (" + std::to_string(v->i) +
                    ", " + std::to_string(v->j) + ")",
                v->i, v->j);
  }
  BitVec x(f + 1);
  for (std::uint32_t i = 1; i <= f; ++i)
    if (bits[i - 1]) x.set(i);
  return KunzVector(f, std::move(x));
}

NumericalSemigroup KunzVector::decode() const {
  return NumericalSemigroup::from_gaps(frobenius_, gaps());
}

bool KunzVector::bit(std::uint32_t i) const {
  if (i < 1 || i > frobenius_)
    throw Error(Errc::invalid_input,
                "coordinate index " + std::to_string(i) + " outside 1..F");
  return x_.test(i);
}

std::vector<std::uint8_t> KunzVector::bits() const {
  std::vector<std::uint8_t> out(frobenius_);
  for (std::uint32_t i = 1; i <= frobenius_; ++i) out[i - 1] = x_.test(i);
  return out;
}

std::uint32_t KunzVector::genus() const {
  return static_cast<std::uint32_t>(x_.count());
}

std::uint32_t KunzVector::multiplicity() const {
  const std::size_t i = x_.find_first_zero(1);
  return i == BitVec::npos ? frobenius_ + 1 : static_cast<std::uint32_t>(i);
}

std::vector<std::uint32_t> KunzVector::gaps() const {
  std::vector<std::uint32_t> out;
  out.reserve(genus());
  x_.for_each_set([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
  return out;
}

std::vector<std::uint32_t> KunzVector::special_gaps() const {
  std::vector<std::uint32_t> out;
  const BitVec zeros = detail::member_mask(*this);
  x_.for_each_set([&](std::size_t gap) {
    const std::uint32_t h = static_cast<std::uint32_t>(gap);
    if (2 * h <= frobenius_ && x_.test(2 * h)) return;
    // A member j <= F - h with h + j a gap disqualifies h.
    if (h < frobenius_ && zeros.intersects_shifted(x_, h, 1, frobenius_ - h))
      return;
    out.push_back(h);
  });
  return out;
}

bool KunzVector::is_irreducible() const { return special_gaps().size() == 1; }

bool KunzVector::is_minimal_generator(std::uint32_t n) const {
  if (n < 1 || n > frobenius_)
    throw Error(Errc::invalid_input,
                "index " + std::to_string(n) + " outside 1..F");
  if (x_.test(n)) return false;
  const BitVec zeros = detail::member_mask(*this);
  return detail::is_min_gen_masked(zeros, zeros.reversed(), frobenius_, n);
}

KunzVector KunzVector::apply_swap(std::uint32_t n) const {
  if (n < 1 || n >= frobenius_ || x_.test(n) || !x_.test(frobenius_ - n))
    throw Error(Errc::bad_swap,
                "swap needs x_n = 0 and x_{F-n} = 1 (n = " + std::to_string(n) +
                    ")");
  BitVec x = x_;
  x.set(n);
  x.reset(frobenius_ - n);
  return KunzVector(frobenius_, std::move(x));
}

std::optional<KunzViolation> validate_kunz(
    const std::vector<std::uint8_t>& bits, std::uint32_t frobenius) {
  if (frobenius < 1 || bits.size() != frobenius)
    throw Error(Errc::invalid_input, "coordinate vector must have length F");
  for (std::uint8_t b : bits)
    if (b > 1) throw Error(Errc::invalid_input, "coordinates must be 0 or 1");
  if (!bits[frobenius - 1])
    return KunzViolation{KunzViolation::Kind::frobenius_not_gap, 0, 0};
  for (std::uint32_t i = 1; 2 * i <= frobenius; ++i) {
    if (bits[i - 1]) continue;
    for (std::uint32_t j = i; i + j <= frobenius; ++j) {
      if (!bits[j - 1] && bits[i + j - 1])
        return KunzViolation{KunzViolation::Kind::closure, i, j};
    }
  }
  return std::nullopt;
}

namespace detail {

BitVec member_mask(const KunzVector& x) {
  BitVec zeros = x.raw_bits().complemented();
  zeros.reset(0);
  return zeros;
}

bool is_min_gen_masked(const BitVec& zeros, const BitVec& zeros_rev,
                       std::uint32_t frobenius, std::uint32_t n) {
  // n is a sum of two nonzero members iff some j in [1, n-1] has both
  // zeros[j] and zeros[n-j]; the reversed mask turns the second lookup into
  // a shifted intersection.
  if (n < 2) return true;
  return !zeros.intersects_shifted(zeros_rev, frobenius - n, 1, n - 1);
}

}  // namespace detail

}  // namespace nsgtree
