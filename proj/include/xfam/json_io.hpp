#pragma once

#include <json.hpp>

#include "xfam/bounds.hpp"
#include "xfam/core.hpp"
#include "xfam/extremal.hpp"
#include "xfam/oracle.hpp"

// JSON views of the report types. Family indices (gamma) are 1-based here
// to match the human-readable output; library structs keep them 0-based.

namespace xfam {

nlohmann::json to_json(const ElementSet& s);
nlohmann::json to_json(const SetFamily& f);
nlohmann::json to_json(const Instance& inst);
nlohmann::json to_json(const BoundReport& rep);
nlohmann::json to_json(const CrossTBound& bound);
nlohmann::json to_json(const OracleResult& res);
nlohmann::json to_json(const SweepReport& rep);
nlohmann::json to_json(const Classification& cls);

}  // namespace xfam
