#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "normlab/dynamics.hpp"
#include "normlab/forms.hpp"
#include "normlab/sintegers.hpp"

namespace normlab {

using Json = nlohmann::ordered_json;

// Rationals are "num/den"; intervals {mid, rad} decimal strings; p-adic
// numbers {p, valuation, unit, N}.
Json to_json(Rational const& q);
Json to_json(Interval const& x, int digits = 17);
Json to_json(PAdic const& x);
Json to_json(PlaceValue const& v);
Json to_json(RationalVector const& x);

Rational rational_from_json(Json const& j);
Interval interval_from_json(Json const& j);
PAdic padic_from_json(Json const& j);

// "1 -1/2 3"
std::string point_string(RationalVector const& x);
// "inf=7/1|5=5^1*1+O(5^32)"
std::string value_string(PlaceValue const& v);

// {"format": "normlab-sform", ..., "components": [{"place", "exact"|"real"|"padic": {"e1,e2": coefficient}}]}
Json to_json(SForm const& f);
SForm sform_from_json(Json const& j);

Json to_json(ScanSummary const& s);
// point,value_per_place,content,flags
std::string scan_csv(ScanSummary const& s);

Json to_json(ShortestVector const& v);
Json to_json(OrbitTrace const& t);
// t,lower,upper,witness
std::string trace_csv(OrbitTrace const& t);

Json to_json(CompactnessReport const& r);
Json to_json(UnitBalanceResult const& r);
Json to_json(SplitBalanceResult const& r);
Json to_json(BalancedReduceResult const& r);

// FNV-1a, rendered as 16 hex digits.
std::string config_hash(std::string const& canonical);

}  // namespace normlab
