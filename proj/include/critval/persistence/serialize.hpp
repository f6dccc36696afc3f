#pragma once

#include "critval/persistence/barcode.hpp"
#include "critval/persistence/criticality.hpp"
#include "critval/persistence/lemmas.hpp"
#include "json.hpp"

namespace critval::persistence {

// {label, bars: [{birth, death, birthClosed, deathClosed, degree}]}, infinite
// endpoints as "inf" / "-inf".
nlohmann::json to_json(const Barcode& bc);
// InvalidArgument on a malformed document or bar.
Barcode barcode_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MapWitness& w);
nlohmann::json to_json(const CriticalityReport& r);
nlohmann::json to_json(const CvlReport& r);
nlohmann::json to_json(const ScvlReport& r);
nlohmann::json to_json(const HfsReport& r);
nlohmann::json to_json(IsoInterval iv);

}  // namespace critval::persistence
