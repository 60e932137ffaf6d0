#include "nsdeg/reference.hpp"

#include <algorithm>

#include "nsdeg/error.hpp"

namespace nsdeg::reference {

namespace {

void require_same_ambient(const RelativeIdeal& e, const RelativeIdeal& f) {
  if (e.semigroup().minimal_generators() != f.semigroup().minimal_generators())
    throw Error(ErrorCode::AmbientMismatch, "ideals live over different semigroups");
}

}  // namespace

RelativeIdeal ideal_sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  const std::int64_t lo = std::min(e.offset(), f.offset());
  const std::int64_t hi = std::max(e.conductor(), f.conductor());
  return RelativeIdeal::from_membership(e.ambient(), lo, hi,
                                        [&](std::int64_t z) { return e.contains(z) || f.contains(z); });
}

RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  const std::int64_t lo = e.offset() + f.offset();
  const std::int64_t hi = std::min(e.conductor() + f.offset(), f.conductor() + e.offset());
  return RelativeIdeal::from_membership(e.ambient(), lo, hi, [&](std::int64_t z) {
    for (std::int64_t x = e.offset(); x <= z - f.offset(); ++x)
      if (e.contains(x) && f.contains(z - x)) return true;
    return false;
  });
}

RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_ambient(e, f);
  const std::int64_t lo = e.offset() - f.offset();
  const std::int64_t hi = e.conductor() - f.offset();
  return RelativeIdeal::from_membership(e.ambient(), lo, hi, [&](std::int64_t z) {
    for (std::int64_t y = f.offset(); z + y < e.conductor(); ++y)
      if (f.contains(y) && !e.contains(z + y)) return false;
    return true;
  });
}

bool subset_of(const RelativeIdeal& e, const RelativeIdeal& f) {
  const std::int64_t hi = std::max(e.conductor(), f.conductor());
  for (std::int64_t z = std::min(e.offset(), f.offset()); z < hi; ++z)
    if (e.contains(z) && !f.contains(z)) return false;
  return true;
}

}  // namespace nsdeg::reference
