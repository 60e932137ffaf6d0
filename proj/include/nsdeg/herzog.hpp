#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nsdeg/ideal.hpp"
#include "nsdeg/semigroup.hpp"

namespace nsdeg {

/// Exponents of the Herzog matrix
///
///   [ X^a1  Y^b2 ]
///   [ Y^b1  Z^c2 ]
///   [ Z^c1  X^a2 ]
///
/// whose 2×2 minors cut out k[t^a, t^b, t^c] for a non-symmetric
/// three-generated semigroup, with X ↦ t^a, Y ↦ t^b, Z ↦ t^c.
struct HerzogExponents {
  std::int64_t a1 = 0, a2 = 0, b1 = 0, b2 = 0, c1 = 0, c2 = 0;
  friend bool operator==(const HerzogExponents&, const HerzogExponents&) = default;
};

struct HerzogData {
  std::array<std::int64_t, 3> assignment{};  // (a, b, c)
  HerzogExponents exponents;
  std::int64_t ddeg_formula = 0;                  // a1·b2·c1
  std::array<std::int64_t, 2> cdeg_candidates{};  // {a1·b1·c1, a2·b2·c2}
};

/// Finds a generator-to-variable assignment satisfying a1 ≤ a2, b2 ≤ b1,
/// c1 ≤ c2. Assignments are tried as the three rotations of the ascending
/// order, then the three rotations of the descending order; the first that
/// satisfies the inequalities wins.
HerzogData herzog_matrix(const NumericalSemigroup& s);

/// All six assignments in search order, whether or not they satisfy the
/// inequalities. Throws NotThreeGenerated / SymmetricSemigroup.
std::vector<HerzogData> herzog_assignments(const NumericalSemigroup& s);

/// The assignments that satisfy the inequalities, in search order.
std::vector<HerzogData> herzog_orientations(const NumericalSemigroup& s);

/// Independent re-check of a HerzogData: inequalities, the three minor
/// identities, and minimality of each pure power. Returns a description of
/// the first violated condition, or an empty string.
std::string verify_herzog(const HerzogData& h);

struct HerzogConsistency {
  HerzogData data;
  std::int64_t formula_ddeg = 0;
  std::int64_t direct_ddeg = 0;
  std::int64_t direct_cdeg = 0;
  bool ddeg_match = false;
  bool cdeg_in_candidates = false;
};
HerzogConsistency herzog_consistency(const SemigroupPtr& s);

/// Census of the closed form over every non-symmetric semigroup minimally
/// generated by a < b < c ≤ max_generator.
struct HerzogFamilyReport {
  std::int64_t max_generator = 0;
  std::int64_t checked = 0;
  std::int64_t ddeg_mismatches = 0;
  std::int64_t cdeg_outside_candidates = 0;
  std::int64_t verification_failures = 0;
  std::int64_t cdeg_is_first = 0;   // cdeg = a1·b1·c1 only
  std::int64_t cdeg_is_second = 0;  // cdeg = a2·b2·c2 only
  std::int64_t cdeg_is_both = 0;    // the candidates coincide
  std::vector<std::array<std::int64_t, 3>> failures;        // any check failed
  std::vector<std::array<std::int64_t, 3>> no_orientation;  // NoValidOrientation
  // For rings without a valid orientation, cdeg checked against the
  // candidates of the first assignment in search order.
  std::int64_t no_orientation_cdeg_outside_candidates = 0;
  std::vector<std::array<std::int64_t, 3>> errors;          // any other Error
};

/// OpenMP over candidate triples; results are merged in triple order.
HerzogFamilyReport herzog_family(std::int64_t max_generator, int threads = 0);
/// Serial reference for herzog_family.
HerzogFamilyReport herzog_family_serial(std::int64_t max_generator);

}  // namespace nsdeg
