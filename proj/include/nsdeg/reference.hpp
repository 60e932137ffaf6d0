#pragma once

#include "nsdeg/ideal.hpp"

// Element-by-element versions of the word-level ideal kernels. Kept for
// differential testing and benchmarking; not used on any production path.
namespace nsdeg::reference {

RelativeIdeal ideal_sum(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal product(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal colon(const RelativeIdeal& e, const RelativeIdeal& f);
bool subset_of(const RelativeIdeal& e, const RelativeIdeal& f);

}  // namespace nsdeg::reference
