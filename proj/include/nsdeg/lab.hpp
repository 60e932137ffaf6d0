#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "nsdeg/ideal.hpp"

namespace nsdeg {

/// Hom(E, E) = S, i.e. E − E = S.
bool is_closed(const RelativeIdeal& e);
/// E** = E.
bool is_reflexive(const RelativeIdeal& e);
/// E = min(E) + S.
bool is_principal(const RelativeIdeal& e);
/// E − min(E) = K(S).
bool is_canonical(const RelativeIdeal& e);
/// λ(E** / E).
std::int64_t relative_ddeg(const RelativeIdeal& e);

/// When M + E ⊆ c + S, so that E/(c) is a k-vector space, returns its
/// dimension |E \ (c + S)|; otherwise nullopt. Throws NotMember if c ∉ E.
std::optional<std::int64_t> socle_quotient(const RelativeIdeal& e, std::int64_t c);

struct SocleWitness {
  std::int64_t element = 0;
  std::int64_t dimension = 0;
  friend bool operator==(const SocleWitness&, const SocleWitness&) = default;
};

/// All c ∈ E whose socle quotient is present with dimension n ≥ 1.
/// Only c ≤ min(E) + e0 can qualify, since c must not exceed min(M + E).
std::vector<SocleWitness> socle_witnesses(const RelativeIdeal& e);

struct IdealProfile {
  RelativeIdeal ideal;
  std::uint64_t gap_mask = 0;  // bit i set iff the i-th gap of S lies in the ideal
  bool is_closed = false;
  bool is_reflexive = false;
  bool is_principal = false;
  bool is_canonical = false;
  std::int64_t rel_ddeg = 0;
  std::vector<SocleWitness> socle_witnesses;

  /// Closed, not canonical, yet carries a socle witness: the conclusion of
  /// the socle criterion fails, so the Ext¹ hypothesis must be what is
  /// missing. Reported, never asserted.
  bool ext_check_required() const { return is_closed && !is_canonical && !socle_witnesses.empty(); }
};

IdealProfile profile(const RelativeIdeal& e);

constexpr std::int64_t kDefaultIdealGenusCap = 22;

/// Visits every relative ideal E with min(E) = 0, as S ∪ G for gap subsets
/// G closed under adding generators, in increasing gap-mask order. Throws
/// FullSemigroup for ℕ and TooLarge when genus exceeds the cap.
void for_each_ideal(const SemigroupPtr& s, const std::function<void(std::uint64_t mask, const RelativeIdeal&)>& visit,
                    std::int64_t genus_cap = kDefaultIdealGenusCap);

std::vector<RelativeIdeal> enumerate_ideals(const SemigroupPtr& s, std::int64_t genus_cap = kDefaultIdealGenusCap);

/// Closes a gap mask under adding generators; exposed so tests can compare
/// the enumeration against plain subset filtering.
bool gap_mask_is_ideal(const NumericalSemigroup& s, std::uint64_t mask);

RelativeIdeal ideal_from_gap_mask(const SemigroupPtr& s, std::uint64_t mask);

}  // namespace nsdeg
