#pragma once

#include "json.hpp"

#include "nsdeg/degrees.hpp"
#include "nsdeg/herzog.hpp"
#include "nsdeg/ideal.hpp"
#include "nsdeg/lab.hpp"
#include "nsdeg/semigroup.hpp"

namespace nsdeg {

using Json = nlohmann::ordered_json;

/// {"generators","frobenius","genus","type","multiplicity","embedding_dim"}
Json to_json(const NumericalSemigroup& s);
/// {"ambient","elements_below_conductor","conductor","offset"}
Json to_json(const RelativeIdeal& e);
Json to_json(const DegreeReport& r);
Json to_json(const HerzogData& h);
Json to_json(const HerzogConsistency& c);
Json to_json(const IdealProfile& p);

DegreeReport degree_report_from_json(const Json& j);

}  // namespace nsdeg
