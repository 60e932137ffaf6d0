#include "nsdeg/ideal.hpp"

#include <algorithm>
#include <string>

#include "nsdeg/checked.hpp"
#include "nsdeg/error.hpp"

namespace nsdeg {

namespace {

// Upper bound on any intermediate window length.
constexpr std::int64_t kWindowCap = 4'000'000;

std::size_t window_length(std::int64_t lo, std::int64_t hi) {
  const std::int64_t n = checked_sub(hi, lo);
  if (n > kWindowCap) throw Error(ErrorCode::Overflow, "ideal window of " + std::to_string(n) + " exceeds cap");
  return static_cast<std::size_t>(std::max<std::int64_t>(n, 0));
}

void require_same_ambient(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.ambient() != f.ambient() && e.semigroup().minimal_generators() != f.semigroup().minimal_generators())
    throw Error(ErrorCode::AmbientMismatch, "ideals live over different semigroups");
}

}  // namespace

RelativeIdeal RelativeIdeal::normalize(SemigroupPtr ambient, std::int64_t lo, const Bitset& bits) {
  const std::size_t first = bits.find_first();
  const std::size_t tail = std::max(bits.tail_start(), std::min(first, bits.size()));
  const std::int64_t offset = lo + static_cast<std::int64_t>(first);
  const std::int64_t conductor = lo + static_cast<std::int64_t>(tail);
  return RelativeIdeal(std::move(ambient), offset, conductor, bits.slice(first, tail - first));
}

RelativeIdeal RelativeIdeal::generate(SemigroupPtr ambient, std::span<const std::int64_t> gens) {
  if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "ideal generator list is empty");
  const std::int64_t lo = *std::min_element(gens.begin(), gens.end());
  const std::int64_t hi = checked_add(lo, ambient->conductor());
  const std::size_t n = window_length(lo, hi);
  const Bitset& sw = ambient->membership_window();
  // sw covers [0, F+1]; only [0, F] matters, the rest is padding.
  const Bitset body = sw.slice(0, static_cast<std::size_t>(ambient->conductor()));
  Bitset bits(n);
  for (std::int64_t g : gens) {
    if (g >= hi) continue;
    const auto shift = static_cast<std::size_t>(g - lo);
    bits.or_shifted(body, shift);
    bits.set_from(shift + body.size());
  }
  return normalize(std::move(ambient), lo, bits);
}

RelativeIdeal RelativeIdeal::from_membership(SemigroupPtr ambient, std::int64_t lo, std::int64_t hi,
                                             const std::function<bool(std::int64_t)>& member) {
  const std::size_t n = window_length(lo, std::max(lo, hi));
  Bitset bits(n);
  for (std::size_t i = 0; i < n; ++i)
    if (member(lo + static_cast<std::int64_t>(i))) bits.set(i);
  RelativeIdeal e = normalize(ambient, lo, bits);
  for (std::int64_t z = e.offset(); z < e.conductor(); ++z) {
    if (!e.contains(z)) continue;
    for (std::int64_t g : ambient->minimal_generators())
      if (!e.contains(z + g))
        throw Error(ErrorCode::NotAnIdeal, std::to_string(z) + " + " + std::to_string(g) + " is missing");
  }
  return e;
}

RelativeIdeal RelativeIdeal::unit(SemigroupPtr ambient) {
  const std::int64_t zero = 0;
  return generate(std::move(ambient), std::span<const std::int64_t>(&zero, 1));
}

RelativeIdeal RelativeIdeal::maximal(SemigroupPtr ambient) {
  const auto gens = ambient->minimal_generators();
  return generate(std::move(ambient), gens);
}

std::vector<std::int64_t> RelativeIdeal::elements_below_conductor() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < window_.size(); ++i)
    if (window_.test(i)) out.push_back(offset_ + static_cast<std::int64_t>(i));
  return out;
}

Bitset RelativeIdeal::indicator(std::int64_t lo, std::size_t len) const {
  Bitset bits(len);
  const auto shift = static_cast<std::size_t>(offset_ - lo);
  bits.or_shifted(window_, shift);
  bits.set_from(static_cast<std::size_t>(std::max<std::int64_t>(conductor_ - lo, 0)));
  return bits;
}

RelativeIdeal RelativeIdeal::shifted(std::int64_t z) const {
  return RelativeIdeal(ambient_, checked_add(offset_, z), checked_add(conductor_, z), window_);
}

bool RelativeIdeal::subset_of(const RelativeIdeal& other) const {
  if (offset_ < other.offset_) return false;
  const std::int64_t hi = std::max(conductor_, other.conductor_);
  const std::size_t n = static_cast<std::size_t>(hi - offset_);
  const Bitset mine = indicator(offset_, n);
  const Bitset outside = ~other.indicator(other.offset_, static_cast<std::size_t>(hi - other.offset_));
  return !outside.intersects_shifted(mine, static_cast<std::size_t>(offset_ - other.offset_));
}

RelativeIdeal ideal_sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  const std::int64_t lo = std::min(e.offset(), f.offset());
  const std::int64_t hi = std::max(e.conductor(), f.conductor());
  const std::size_t n = window_length(lo, hi);
  Bitset bits = e.indicator(lo, n);
  bits.or_shifted(f.indicator(f.offset(), static_cast<std::size_t>(hi - f.offset())),
                  static_cast<std::size_t>(f.offset() - lo));
  return RelativeIdeal::normalize(e.ambient(), lo, bits);
}

RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  const std::int64_t lo = checked_add(e.offset(), f.offset());
  const std::int64_t hi = std::min(checked_add(e.conductor(), f.offset()), checked_add(f.conductor(), e.offset()));
  const std::size_t n = window_length(lo, hi);
  const Bitset fbits = f.indicator(f.offset(), n);
  Bitset bits(n);
  for (std::size_t k = 0; k < n; ++k)
    if (e.contains(e.offset() + static_cast<std::int64_t>(k))) bits.or_shifted(fbits, k);
  return RelativeIdeal::normalize(e.ambient(), lo, bits);
}

RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  // Candidates z with z + min(F) >= min(E); all z >= c(E) - min(F) qualify.
  const std::int64_t lo = checked_sub(e.offset(), f.offset());
  const std::int64_t hi = checked_sub(e.conductor(), f.offset());
  const std::size_t n = window_length(lo, hi);
  const Bitset outside = ~e.window();
  const Bitset fbits = f.indicator(f.offset(), n);
  Bitset bits(n);
  for (std::size_t k = 0; k < n; ++k)
    if (!outside.intersects_shifted(fbits, k)) bits.set(k);
  return RelativeIdeal::normalize(e.ambient(), lo, bits);
}

RelativeIdeal dual(const RelativeIdeal& e) { return colon(RelativeIdeal::unit(e.ambient()), e); }

RelativeIdeal bidual(const RelativeIdeal& e) {
  const RelativeIdeal s = RelativeIdeal::unit(e.ambient());
  return colon(s, colon(s, e));
}

RelativeIdeal trace(const RelativeIdeal& e) { return product(e, dual(e)); }

RelativeIdeal power(const RelativeIdeal& e, std::int64_t n) {
  RelativeIdeal acc = RelativeIdeal::unit(e.ambient());
  for (std::int64_t i = 0; i < n; ++i) acc = product(acc, e);
  return acc;
}

std::int64_t length_quotient(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  const std::int64_t lo = std::min(e.offset(), f.offset());
  const std::int64_t hi = std::max(e.conductor(), f.conductor());
  std::int64_t count = 0;
  for (std::int64_t z = lo; z < hi; ++z) {
    const bool in_e = e.contains(z);
    const bool in_f = f.contains(z);
    if (in_f && !in_e) throw Error(ErrorCode::NotContained, "witness " + std::to_string(z) + " lies in F but not E");
    if (in_e && !in_f) ++count;
  }
  return count;
}

std::vector<std::int64_t> minimal_generators(const RelativeIdeal& e) {
  const RelativeIdeal me = product(RelativeIdeal::maximal(e.ambient()), e);
  std::vector<std::int64_t> out;
  for (std::int64_t z = e.offset(); z < me.conductor() || z < e.conductor(); ++z)
    if (e.contains(z) && !me.contains(z)) out.push_back(z);
  return out;
}

ReductionData reduction(const RelativeIdeal& e) {
  constexpr std::int64_t kMaxIterations = 64;
  const std::int64_t a = e.offset();
  RelativeIdeal current = RelativeIdeal::unit(e.ambient());
  for (std::int64_t r = 0; r < kMaxIterations; ++r) {
    RelativeIdeal next = product(current, e);
    if (next == current.shifted(a)) {
      const RelativeIdeal after = product(next, e);
      if (after != next.shifted(a))
        throw Error(ErrorCode::InternalInvariantViolation, "power sequence did not stay stable after r = " +
                                                               std::to_string(r));
      return {a, r};
    }
    current = std::move(next);
  }
  throw Error(ErrorCode::InternalInvariantViolation, "reduction number search exceeded 64 powers");
}

RelativeIdeal canonical_ideal(SemigroupPtr s) {
  const std::int64_t f = s->frobenius();
  const auto n = static_cast<std::size_t>(f + 1);
  Bitset bits(n);
  for (std::int64_t x = 0; x <= f; ++x)
    if (!s->contains(f - x)) bits.set(static_cast<std::size_t>(x));
  return RelativeIdeal::normalize(std::move(s), 0, bits);
}

}  // namespace nsdeg
