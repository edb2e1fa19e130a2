#pragma once

#include <nlohmann/json.hpp>

#include "preach/reach/decide.hpp"

namespace preach::io {

nlohmann::ordered_json witnessToJson(const reach::Witness& w);
nlohmann::ordered_json verdictToJson(const reach::ReachVerdict& v);
nlohmann::ordered_json deltaToJson(const reach::DeltaDecision& d);

/// Accepts a bare witness object or a verdict object with a "witness" field.
reach::Witness parseWitnessJson(const nlohmann::json& doc);

}  // namespace preach::io
