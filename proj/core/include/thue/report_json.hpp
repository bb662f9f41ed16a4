#pragma once

#include <string>

#include <json.hpp>

#include "thue/bounds.hpp"
#include "thue/logcurve.hpp"
#include "thue/roots.hpp"
#include "thue/solver.hpp"

namespace thue {

using json = nlohmann::json;

// Interval rendering: midpoint decimal (certified digits only) plus an
// explicit half-width, and lossless hex endpoints for exact re-parsing.
json interval_to_json(const Interval& v, int digits = 17);
Interval interval_from_json(const json& j);

json solution_to_json(const Solution& s);
json enumeration_to_json(const EnumerationResult& r);
std::string enumeration_to_csv(const EnumerationResult& r);

json mahler_to_json(const MahlerMeasure& m);
json rootsystem_to_json(const RootSystem& rs);

json bound_entry_to_json(const BoundEntry& e);
json bound_report_to_json(const BoundReport& r);
std::string bound_report_table(const BoundReport& r);

json logpoint_to_json(const LogPoint& p);
json gap_to_json(const GapDiagnostics& g);

// Round-trip helpers for the machine format.
EnumerationResult enumeration_from_json(const json& j);
BoundReport bound_report_from_json(const json& j);

}  // namespace thue
