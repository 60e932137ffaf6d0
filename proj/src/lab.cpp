#include "nsdeg/lab.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "nsdeg/error.hpp"

namespace nsdeg {

bool is_closed(const RelativeIdeal& e) { return colon(e, e) == RelativeIdeal::unit(e.ambient()); }

bool is_reflexive(const RelativeIdeal& e) { return bidual(e) == e; }

bool is_principal(const RelativeIdeal& e) { return RelativeIdeal::unit(e.ambient()).shifted(e.offset()) == e; }

bool is_canonical(const RelativeIdeal& e) { return e.normalized() == canonical_ideal(e.ambient()); }

std::int64_t relative_ddeg(const RelativeIdeal& e) { return length_quotient(bidual(e), e); }

std::optional<std::int64_t> socle_quotient(const RelativeIdeal& e, std::int64_t c) {
  if (!e.contains(c)) throw Error(ErrorCode::NotMember, std::to_string(c) + " is not in the ideal");
  const RelativeIdeal principal = RelativeIdeal::unit(e.ambient()).shifted(c);
  if (!product(RelativeIdeal::maximal(e.ambient()), e).subset_of(principal)) return std::nullopt;
  return length_quotient(e, principal);
}

std::vector<SocleWitness> socle_witnesses(const RelativeIdeal& e) {
  std::vector<SocleWitness> out;
  const std::int64_t top = e.offset() + e.semigroup().multiplicity();
  for (std::int64_t c = e.offset(); c <= top; ++c) {
    if (!e.contains(c)) continue;
    if (auto n = socle_quotient(e, c); n && *n >= 1) out.push_back({c, *n});
  }
  return out;
}

IdealProfile profile(const RelativeIdeal& e) {
  IdealProfile p{e.normalized(), 0, false, false, false, false, 0, {}};
  const auto& gaps = e.semigroup().gaps();
  for (std::size_t i = 0; i < gaps.size() && i < 64; ++i)
    if (p.ideal.contains(gaps[i])) p.gap_mask |= std::uint64_t{1} << i;
  p.is_closed = is_closed(p.ideal);
  p.is_reflexive = is_reflexive(p.ideal);
  p.is_principal = is_principal(p.ideal);
  p.is_canonical = is_canonical(p.ideal);
  p.rel_ddeg = relative_ddeg(p.ideal);
  p.socle_witnesses = socle_witnesses(p.ideal);
  return p;
}

bool gap_mask_is_ideal(const NumericalSemigroup& s, std::uint64_t mask) {
  const auto& gaps = s.gaps();
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (!((mask >> i) & 1u)) continue;
    for (std::int64_t g : s.minimal_generators()) {
      const std::int64_t z = gaps[i] + g;
      if (s.contains(z)) continue;
      const auto j = static_cast<std::size_t>(std::lower_bound(gaps.begin(), gaps.end(), z) - gaps.begin());
      if (!((mask >> j) & 1u)) return false;
    }
  }
  return true;
}

RelativeIdeal ideal_from_gap_mask(const SemigroupPtr& s, std::uint64_t mask) {
  const auto& gaps = s->gaps();
  Bitset bits(static_cast<std::size_t>(s->conductor()));
  for (std::int64_t z = 0; z < s->conductor(); ++z)
    if (s->contains(z)) bits.set(static_cast<std::size_t>(z));
  for (std::size_t i = 0; i < gaps.size(); ++i)
    if ((mask >> i) & 1u) bits.set(static_cast<std::size_t>(gaps[i]));
  return RelativeIdeal::normalize(s, 0, bits);
}

void for_each_ideal(const SemigroupPtr& s, const std::function<void(std::uint64_t, const RelativeIdeal&)>& visit,
                    std::int64_t genus_cap) {
  if (s->is_full()) throw Error(ErrorCode::FullSemigroup, "N has no gaps to enumerate");
  if (s->genus() > genus_cap || s->genus() >= 63)
    throw Error(ErrorCode::TooLarge, "genus " + std::to_string(s->genus()) + " exceeds cap " + std::to_string(genus_cap));
  const auto& gaps = s->gaps();
  // need[i]: gaps reachable from gap i by one generator step.
  std::vector<std::uint64_t> need(gaps.size(), 0);
  for (std::size_t i = 0; i < gaps.size(); ++i)
    for (std::int64_t g : s->minimal_generators()) {
      const auto it = std::lower_bound(gaps.begin(), gaps.end(), gaps[i] + g);
      if (it != gaps.end() && *it == gaps[i] + g) need[i] |= std::uint64_t{1} << (it - gaps.begin());
    }
  const std::uint64_t end = std::uint64_t{1} << gaps.size();
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    bool closed = true;
    for (std::uint64_t rest = mask; rest && closed; rest &= rest - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(rest));
      closed = (need[i] & ~mask) == 0;
    }
    if (closed) visit(mask, ideal_from_gap_mask(s, mask));
  }
}

std::vector<RelativeIdeal> enumerate_ideals(const SemigroupPtr& s, std::int64_t genus_cap) {
  std::vector<RelativeIdeal> out;
  for_each_ideal(s, [&](std::uint64_t, const RelativeIdeal& e) { out.push_back(e); }, genus_cap);
  return out;
}

}  // namespace nsdeg
