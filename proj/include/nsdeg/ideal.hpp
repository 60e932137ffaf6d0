#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "nsdeg/bitset.hpp"
#include "nsdeg/semigroup.hpp"

namespace nsdeg {

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

inline SemigroupPtr share(NumericalSemigroup s) { return std::make_shared<const NumericalSemigroup>(std::move(s)); }

/// A relative (monomial fractional) ideal of S, stored by its value set
/// E ⊆ ℤ: bounded below by offset(), complete from conductor() upward, with
/// a membership window over [offset, conductor).
///
/// The representation is a normal form: offset is the minimum of E and
/// conductor is the least c with [c, ∞) ⊆ E, so structural equality is set
/// equality.
class RelativeIdeal {
 public:
  /// ∪_{g ∈ gens} (g + S).
  static RelativeIdeal generate(SemigroupPtr ambient, std::span<const std::int64_t> gens);
  static RelativeIdeal generate(SemigroupPtr ambient, std::initializer_list<std::int64_t> gens) {
    return generate(std::move(ambient), std::span<const std::int64_t>(gens.begin(), gens.size()));
  }

  /// Value set {z ≥ lo : member(z)} ∪ [hi, ∞). Validates E + S ⊆ E and
  /// throws NotAnIdeal otherwise.
  static RelativeIdeal from_membership(SemigroupPtr ambient, std::int64_t lo, std::int64_t hi,
                                       const std::function<bool(std::int64_t)>& member);

  /// S regarded as an ideal over itself.
  static RelativeIdeal unit(SemigroupPtr ambient);
  /// The maximal ideal M = S \ {0}.
  static RelativeIdeal maximal(SemigroupPtr ambient);

  const SemigroupPtr& ambient() const noexcept { return ambient_; }
  const NumericalSemigroup& semigroup() const noexcept { return *ambient_; }
  std::int64_t offset() const noexcept { return offset_; }
  std::int64_t conductor() const noexcept { return conductor_; }
  /// Membership over [offset, conductor).
  const Bitset& window() const noexcept { return window_; }

  bool contains(std::int64_t z) const noexcept {
    if (z < offset_) return false;
    if (z >= conductor_) return true;
    return window_.test(static_cast<std::size_t>(z - offset_));
  }

  std::vector<std::int64_t> elements_below_conductor() const;

  /// Membership over [lo, lo + len) for lo ≤ offset().
  Bitset indicator(std::int64_t lo, std::size_t len) const;

  /// z + E.
  RelativeIdeal shifted(std::int64_t z) const;
  /// E - min(E), the representative with minimum 0.
  RelativeIdeal normalized() const { return shifted(-offset_); }

  bool subset_of(const RelativeIdeal& other) const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) noexcept {
    return a.offset_ == b.offset_ && a.conductor_ == b.conductor_ && a.window_ == b.window_ &&
           a.ambient_->minimal_generators() == b.ambient_->minimal_generators();
  }

  /// Normal form of the bits over [lo, lo + bits.size()) padded with [hi, ∞).
  /// No closure check; kernels use it on sets that are ideals by construction.
  static RelativeIdeal normalize(SemigroupPtr ambient, std::int64_t lo, const Bitset& bits);

 private:
  RelativeIdeal(SemigroupPtr ambient, std::int64_t offset, std::int64_t conductor, Bitset window)
      : ambient_(std::move(ambient)), offset_(offset), conductor_(conductor), window_(std::move(window)) {}

  SemigroupPtr ambient_;
  std::int64_t offset_ = 0;
  std::int64_t conductor_ = 0;
  Bitset window_;
};

struct ReductionData {
  std::int64_t element_value = 0;
  std::int64_t reduction_number = 0;
};

// Ideal calculus. All binary operations require a common ambient semigroup
// and throw AmbientMismatch otherwise.

RelativeIdeal ideal_sum(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f);
/// E : F = {z : z + F ⊆ E}.
RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal dual(const RelativeIdeal& e);
RelativeIdeal bidual(const RelativeIdeal& e);
/// E · (S - E); always inside S.
RelativeIdeal trace(const RelativeIdeal& e);
/// E^n, with E^0 = S.
RelativeIdeal power(const RelativeIdeal& e, std::int64_t n);

/// λ(E/F) = |E \ F|. Throws NotContained with a witness when F ⊄ E.
std::int64_t length_quotient(const RelativeIdeal& e, const RelativeIdeal& f);

/// E \ (M + E).
std::vector<std::int64_t> minimal_generators(const RelativeIdeal& e);

/// Reduction element t^min(E) and the least r with E^{r+1} = min(E) + E^r.
ReductionData reduction(const RelativeIdeal& e);

/// K(S) = {x : F - x ∉ S}, minimum 0.
RelativeIdeal canonical_ideal(SemigroupPtr s);

}  // namespace nsdeg
