#include "nsgtree/semigroup.hpp"

#include <algorithm>
#include <numeric>

namespace nsgtree {

NumericalSemigroup NumericalSemigroup::from_generators(
    const std::vector<std::uint32_t>& gens) {
  if (gens.empty()) throw Error(Errc::empty_input, "no generators given");
  std::vector<std::uint32_t> g = gens;
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  if (g.front() == 0)
    throw Error(Errc::invalid_input, "generators must be positive");

  std::uint32_t d = 0;
  for (std::uint32_t v : g) d = std::gcd(d, v);
  if (d != 1)
    throw Error(Errc::gcd_not_one, "generators have gcd " + std::to_string(d));
  if (g.front() == 1)
    throw Error(Errc::no_gaps, "1 generates all of N; no Frobenius number");

  const std::uint32_t m = g.front();
  // Sieve reachable sums over a growing window until m consecutive members
  // appear; from there on every integer is a member, so the last gap below
  // that run is the Frobenius number.
  std::size_t window = 2 * static_cast<std::size_t>(g.back()) + 2;
  std::vector<char> reach;
  std::size_t stable_from = 0;
  for (;;) {
    reach.assign(window, 0);
    reach[0] = 1;
    std::size_t run = 0;
    stable_from = 0;
    for (std::size_t i = 1; i < window; ++i) {
      for (std::uint32_t q : g) {
        if (q > i) break;
        if (reach[i - q]) {
          reach[i] = 1;
          break;
        }
      }
      run = reach[i] ? run + 1 : 0;
      if (run == m) {
        stable_from = i - m + 1;
        break;
      }
    }
    if (stable_from) break;
    window *= 2;
  }

  std::uint32_t f = 0;
  for (std::size_t i = stable_from; i-- > 1;) {
    if (!reach[i]) {
      f = static_cast<std::uint32_t>(i);
      break;
    }
  }
  // m >= 2, so 1 is a gap and f >= 1.
  BitVec members(f + 1);
  for (std::uint32_t i = 0; i <= f; ++i)
    if (reach[i]) members.set(i);
  return NumericalSemigroup(f, std::move(members));
}

NumericalSemigroup NumericalSemigroup::from_gaps(
    std::uint32_t frobenius, const std::vector<std::uint32_t>& gaps) {
  if (frobenius < 1)
    throw Error(Errc::invalid_frobenius, "Frobenius number must be >= 1");
  BitVec members(frobenius + 1, true);
  for (std::uint32_t gap : gaps) {
    if (gap < 1 || gap > frobenius)
      throw Error(Errc::invalid_input,
                  "gap " + std::to_string(gap) + " outside 1.." +
                      std::to_string(frobenius));
    members.reset(gap);
  }
  if (members.test(frobenius))
    throw Error(Errc::frobenius_missing,
                "the Frobenius number must itself be a gap");
  // Closure check inside the window; sums beyond F are members anyway.
  // Reports the lexicographically first violating pair.
  for (std::uint32_t a = 1; 2 * a <= frobenius; ++a) {
    if (!members.test(a)) continue;
    for (std::uint32_t b = a; a + b <= frobenius; ++b) {
      if (members.test(b) && !members.test(a + b))
        throw Error(Errc::not_closed,
                    "members " + std::to_string(a) + " + " + std::to_string(b) +
                        " = " + std::to_string(a + b) + " is a gap",
                    a, b);
    }
  }
  return NumericalSemigroup(frobenius, std::move(members));
}

std::uint32_t NumericalSemigroup::multiplicity() const {
  const std::size_t i = members_.find_first_set(1);
  return i == BitVec::npos ? frobenius_ + 1 : static_cast<std::uint32_t>(i);
}

std::uint32_t NumericalSemigroup::genus() const {
  return frobenius_ + 1 - static_cast<std::uint32_t>(members_.count());
}

bool NumericalSemigroup::contains(std::int64_t s) const {
  if (s < 0) return false;
  if (s > frobenius_) return true;
  return members_.test(static_cast<std::size_t>(s));
}

std::vector<std::uint32_t> NumericalSemigroup::gaps() const {
  std::vector<std::uint32_t> out;
  out.reserve(genus());
  for (std::uint32_t i = 1; i <= frobenius_; ++i)
    if (!members_.test(i)) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> NumericalSemigroup::minimal_generators() const {
  std::vector<std::uint32_t> out;
  const std::uint32_t m = multiplicity();
  for (std::uint32_t n = m; n <= frobenius_ + m; ++n) {
    if (!contains(n)) continue;
    bool minimal = true;
    for (std::uint32_t a = m; 2 * a <= n; ++a) {
      if (contains(a) && contains(static_cast<std::int64_t>(n) - a)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

AperySet NumericalSemigroup::apery_set(std::uint32_t n) const {
  if (n == 0 || !contains(n))
    throw Error(Errc::not_a_member,
                std::to_string(n) + " is not a nonzero member");
  AperySet ap;
  ap.modulus = n;
  ap.least.resize(n);
  ap.least[0] = 0;
  for (std::uint32_t i = 1; i < n; ++i) {
    std::uint64_t s = i;
    while (!contains(static_cast<std::int64_t>(s))) s += n;
    ap.least[i] = s;
  }
  return ap;
}

std::vector<std::uint32_t> NumericalSemigroup::pseudo_frobenius() const {
  std::vector<std::uint32_t> out;
  const std::uint32_t m = multiplicity();
  for (std::uint32_t x = 1; x <= frobenius_; ++x) {
    if (members_.test(x)) continue;
    bool ok = true;
    // x + s with s > F - x lands above F and is a member automatically.
    for (std::uint32_t s = m; s + x <= frobenius_; ++s) {
      if (members_.test(s) && !members_.test(x + s)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> NumericalSemigroup::special_gaps() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t h : pseudo_frobenius())
    if (contains(2 * static_cast<std::int64_t>(h))) out.push_back(h);
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  return (frobenius_ & 1) && genus() == (frobenius_ + 1) / 2;
}

bool NumericalSemigroup::is_pseudo_symmetric() const {
  return !(frobenius_ & 1) && genus() == (frobenius_ + 2) / 2;
}

bool NumericalSemigroup::is_irreducible() const {
  return genus() == (frobenius_ + 2) / 2;  // ceil((F+1)/2)
}

bool NumericalSemigroup::is_symmetric_by_mirror() const {
  if (!(frobenius_ & 1)) return false;
  for (std::uint32_t x = 1; x <= frobenius_; ++x)
    if (!members_.test(x) && !members_.test(frobenius_ - x)) return false;
  return true;
}

bool NumericalSemigroup::is_pseudo_symmetric_by_mirror() const {
  if (frobenius_ & 1) return false;
  for (std::uint32_t x = 1; x <= frobenius_; ++x) {
    if (members_.test(x) || 2 * x == frobenius_) continue;
    if (!members_.test(frobenius_ - x)) return false;
  }
  return true;
}

NumericalSemigroup NumericalSemigroup::remove_minimal_generator(
    std::uint32_t x) const {
  const std::vector<std::uint32_t> gens = minimal_generators();
  if (!std::binary_search(gens.begin(), gens.end(), x))
    throw Error(Errc::not_minimal_generator,
                std::to_string(x) + " is not a minimal generator");
  std::vector<std::uint32_t> g = gaps();
  g.push_back(x);
  // Removal preserves closure (x was minimal); from_gaps re-verifies.
  return from_gaps(std::max(frobenius_, x), g);
}

std::uint64_t genus_via_selmer(const NumericalSemigroup& s, std::uint32_t n) {
  const AperySet ap = s.apery_set(n);
  std::uint64_t sum = 0;
  for (std::uint64_t w : ap.least) sum += w;
  const std::uint64_t num = 2 * sum - static_cast<std::uint64_t>(n) * (n - 1);
  return num / (2 * static_cast<std::uint64_t>(n));
}

std::uint64_t frobenius_via_apery(const NumericalSemigroup& s,
                                  std::uint32_t n) {
  const AperySet ap = s.apery_set(n);
  return *std::max_element(ap.least.begin(), ap.least.end()) - n;
}

bool gap_lex_less(const NumericalSemigroup& a, const NumericalSemigroup& b) {
  const std::vector<std::uint32_t> ga = a.gaps(), gb = b.gaps();
  return std::lexicographical_compare(ga.begin(), ga.end(), gb.begin(),
                                      gb.end());
}

}  // namespace nsgtree
