#pragma once

#include "critval/models/column_complex.hpp"
#include "critval/models/piece_complex.hpp"
#include "json.hpp"

namespace critval::models {

// Finite doubles as JSON numbers; infinities as the strings "inf" / "-inf".
nlohmann::json number_to_json(double v);
// Inverse of number_to_json; InvalidArgument on anything else.
double number_from_json(const nlohmann::json& j);

nlohmann::json span_to_json(const Span& s);
nlohmann::json to_json(const SectionSpec& s);

// {family, level, pieces[], adjacency[], betti{"0", "1"}, components, section?}
nlohmann::json to_json(const PieceComplex& m);
// {family, level, glue_symbolic, columns[{x, symbolic, cells[[lo, hi]]}], betti{"0", "1"}}
nlohmann::json to_json(const ColumnComplex& cc);

}  // namespace critval::models
