#pragma once

// Brute-force oracles for the test suites. Deliberately naive: plain bool
// vectors over a generous window, no bitsets, no normal forms, nothing
// shared with the library code paths they check.

#include <algorithm>
#include <cstdint>
#include <vector>

namespace oracle {

// Explicit window [lo, top); everything at or above top is a member and
// nothing below lo is.
struct ValueSet {
  std::int64_t lo = 0;
  std::int64_t top = 0;
  std::vector<bool> bits;

  bool contains(std::int64_t z) const {
    if (z < lo) return false;
    if (z >= top) return true;
    return bits[static_cast<std::size_t>(z - lo)];
  }

  friend bool operator==(const ValueSet& a, const ValueSet& b) {
    const std::int64_t lo = std::min(a.lo, b.lo);
    const std::int64_t hi = std::max(a.top, b.top);
    for (std::int64_t z = lo; z < hi; ++z)
      if (a.contains(z) != b.contains(z)) return false;
    return true;
  }

  std::vector<std::int64_t> elements_below(std::int64_t bound) const {
    std::vector<std::int64_t> out;
    for (std::int64_t z = lo; z < bound; ++z)
      if (contains(z)) out.push_back(z);
    return out;
  }
};

template <typename Pred>
ValueSet make_set(std::int64_t lo, std::int64_t top, Pred pred) {
  ValueSet s{lo, top, std::vector<bool>(static_cast<std::size_t>(top - lo))};
  for (std::int64_t z = lo; z < top; ++z) s.bits[static_cast<std::size_t>(z - lo)] = pred(z);
  return s;
}

/// Membership in ⟨gens⟩ over [0, limit) by dynamic programming.
inline std::vector<bool> semigroup_members(const std::vector<std::int64_t>& gens, std::int64_t limit) {
  std::vector<bool> m(static_cast<std::size_t>(limit), false);
  m[0] = true;
  for (std::int64_t z = 1; z < limit; ++z)
    for (std::int64_t g : gens)
      if (z >= g && m[static_cast<std::size_t>(z - g)]) {
        m[static_cast<std::size_t>(z)] = true;
        break;
      }
  return m;
}

struct Semigroup {
  std::vector<std::int64_t> gens;
  std::int64_t limit = 0;
  std::vector<bool> members;

  Semigroup(std::vector<std::int64_t> g, std::int64_t lim) : gens(std::move(g)), limit(lim) {
    members = semigroup_members(gens, limit);
  }
  bool contains(std::int64_t z) const { return z >= 0 && (z >= limit || members[static_cast<std::size_t>(z)]); }
  std::int64_t frobenius() const {
    std::int64_t f = -1;
    for (std::int64_t z = 0; z < limit; ++z)
      if (!members[static_cast<std::size_t>(z)]) f = z;
    return f;
  }
  std::vector<std::int64_t> gaps() const {
    std::vector<std::int64_t> g;
    for (std::int64_t z = 0; z < limit; ++z)
      if (!members[static_cast<std::size_t>(z)]) g.push_back(z);
    return g;
  }
  ValueSet as_set(std::int64_t lo, std::int64_t top) const {
    return make_set(lo, top, [&](std::int64_t z) { return contains(z); });
  }
};

inline ValueSet canonical(const Semigroup& s, std::int64_t lo, std::int64_t top) {
  const std::int64_t f = s.frobenius();
  return make_set(lo, top, [&](std::int64_t x) { return !s.contains(f - x); });
}

inline ValueSet product(const ValueSet& e, const ValueSet& f) {
  // z >= e.top + f.top splits as (z - f.top) + f.top.
  return make_set(e.lo + f.lo, e.top + f.top, [&](std::int64_t z) {
    for (std::int64_t x = e.lo; x <= z - f.lo; ++x)
      if (e.contains(x) && f.contains(z - x)) return true;
    return false;
  });
}

/// {z : z + F ⊆ E}; every f with z + f ≥ e.top lands in E automatically.
inline ValueSet colon(const ValueSet& e, const ValueSet& f) {
  return make_set(e.lo - f.top, e.top - f.lo, [&](std::int64_t z) {
    for (std::int64_t y = f.lo; z + y < e.top; ++y)
      if (f.contains(y) && !e.contains(z + y)) return false;
    return true;
  });
}

inline std::int64_t length_difference(const ValueSet& big, const ValueSet& small) {
  std::int64_t n = 0;
  const std::int64_t hi = std::max(big.top, small.top);
  for (std::int64_t z = std::min(big.lo, small.lo); z < hi; ++z)
    if (big.contains(z) && !small.contains(z)) ++n;
  return n;
}

/// Gap sets of genus g: subsets of [1, 2g-1] of size g whose complement in
/// ℕ is additively closed. Returns the count.
inline std::int64_t count_by_gap_subsets(int genus) {
  if (genus == 0) return 1;
  const int span = 2 * genus - 1;
  std::int64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << span); ++mask) {
    if (__builtin_popcount(mask) != genus) continue;
    auto member = [&](int z) { return z == 0 || z > span || !((mask >> (z - 1)) & 1u); };
    bool ok = true;
    for (int x = 1; x <= span && ok; ++x)
      for (int y = x; x + y <= span && ok; ++y)
        if (member(x) && member(y) && !member(x + y)) ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace oracle
