#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nsdeg/bitset.hpp"

namespace nsdeg {

struct Limits {
  /// Hard cap on frobenius + 1, i.e. on the membership window length.
  std::int64_t window_cap = 1'000'000;
};

/// A numerical semigroup S ⊆ ℕ, stored through its minimal generators and a
/// membership window over [0, frobenius + 1]. Everything above the Frobenius
/// number is a member. Immutable once built; all caches are filled eagerly.
class NumericalSemigroup {
 public:
  /// The full semigroup ℕ (frobenius = -1).
  NumericalSemigroup();

  static NumericalSemigroup from_generators(std::span<const std::int64_t> gens, Limits limits = {});
  static NumericalSemigroup from_generators(std::initializer_list<std::int64_t> gens, Limits limits = {}) {
    return from_generators(std::span<const std::int64_t>(gens.begin(), gens.size()), limits);
  }

  /// Builds S = ℕ \ gaps. Throws InvalidGapSet when the complement is not
  /// closed under addition.
  static NumericalSemigroup from_gaps(std::span<const std::int64_t> gaps);

  /// S \ {g} for a minimal generator g > frobenius; the children of S in the
  /// genus tree.
  NumericalSemigroup remove_generator(std::int64_t g) const;

  const std::vector<std::int64_t>& minimal_generators() const noexcept { return gens_; }
  std::int64_t frobenius() const noexcept { return frobenius_; }
  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }
  std::int64_t multiplicity() const noexcept { return gens_.front(); }
  std::int64_t embedding_dimension() const noexcept { return static_cast<std::int64_t>(gens_.size()); }
  /// Conductor frobenius + 1: every z ≥ conductor() is in S.
  std::int64_t conductor() const noexcept { return frobenius_ + 1; }
  bool is_full() const noexcept { return frobenius_ < 0; }

  /// Membership over [0, frobenius + 1].
  const Bitset& membership_window() const noexcept { return window_; }

  bool contains(std::int64_t z) const noexcept {
    if (z < 0) return false;
    if (z > frobenius_) return true;
    return window_.test(static_cast<std::size_t>(z));
  }

  /// Entry i is the smallest element of S congruent to i mod n.
  std::vector<std::int64_t> apery_set(std::int64_t n) const;

  /// PF(S); throws FullSemigroup for ℕ.
  const std::vector<std::int64_t>& pseudo_frobenius() const;

  /// Cohen-Macaulay type |PF(S)|; 1 for ℕ.
  std::int64_t type() const noexcept { return is_full() ? 1 : static_cast<std::int64_t>(pf_.size()); }

  /// Throws FullSemigroup for ℕ.
  bool is_symmetric() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.gens_ == b.gens_;
  }

 private:
  // window over [0, frobenius+1]; gens and caches are derived here.
  NumericalSemigroup(std::int64_t frobenius, Bitset window);

  std::vector<std::int64_t> gens_;
  std::int64_t frobenius_ = -1;
  std::vector<std::int64_t> gaps_;
  Bitset window_;
  std::vector<std::int64_t> pf_;
};

}  // namespace nsdeg
