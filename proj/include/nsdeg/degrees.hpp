#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsdeg/ideal.hpp"
#include "nsdeg/semigroup.hpp"

namespace nsdeg {

// Degree invariants of the semigroup ring k[[t^S]], all computed on value
// sets of the canonical ideal K = K(S).

/// λ(K / S).
std::int64_t cdeg(const SemigroupPtr& s);
/// λ(K** / K).
std::int64_t ddeg(const SemigroupPtr& s);
/// λ(S / tr(K)).
std::int64_t tdeg(const SemigroupPtr& s);
/// Reduction number of K with respect to t^0.
std::int64_t canonical_index(const SemigroupPtr& s);

/// Degrees of the idealization R ⋉ m from the closed formulas
/// 2·cdeg + 2 (needs S ≠ ℕ) and 2·ddeg − 1 (needs S non-symmetric).
/// A component is absent when its hypothesis fails.
struct IdealizationDegrees {
  std::optional<std::int64_t> cdeg;
  std::optional<std::int64_t> ddeg;
};
IdealizationDegrees idealization_degrees(const SemigroupPtr& s);

/// Value semigroup of m : m, i.e. M − M. Throws FullSemigroup for ℕ.
NumericalSemigroup endomorphism_blowup(const SemigroupPtr& s);

/// cdeg(M − M) against cdeg(S) + e0(m) − 2·type.
struct TcdegCheck {
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool equal = false;
};
TcdegCheck tcdeg_check(const SemigroupPtr& s);

struct DegreeReport {
  std::vector<std::int64_t> generators;
  std::int64_t frobenius = -1;
  std::int64_t genus = 0;
  std::int64_t multiplicity = 1;
  std::int64_t embedding_dim = 1;
  std::int64_t type_r = 1;
  std::int64_t cdeg = 0;
  std::int64_t ddeg = 0;
  std::int64_t tdeg = 0;
  std::int64_t canonical_index = 0;
  bool gorenstein = true;
  bool almost_gorenstein = true;
  bool ddeg_is_one = false;
  IdealizationDegrees idealization;
  std::optional<TcdegCheck> tcdeg;  // absent for ℕ
};

/// Fills every field without cross-checking; sweeps use this and evaluate
/// the theorems themselves so a failure becomes a record, not an abort.
DegreeReport compute_report(const SemigroupPtr& s);

/// compute_report plus the internal cross-checks cdeg ≥ type − 1 and
/// gorenstein ⟺ cdeg = 0 ⟺ ddeg = 0. Throws InternalInvariantViolation.
DegreeReport classify(const SemigroupPtr& s);

}  // namespace nsdeg
