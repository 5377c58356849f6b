#pragma once

#include <string>

#include <json.hpp>

#include "diagsurf/codes.hpp"
#include "diagsurf/counts.hpp"
#include "diagsurf/enumerate.hpp"
#include "diagsurf/hermitian.hpp"
#include "diagsurf/zeta.hpp"

namespace diagsurf {

using Json = nlohmann::ordered_json;

// CSV with '#' header comments describing the field and the element code,
// then a column header row and one row of element codes per point.
std::string point_matrix_csv(const Field& field, const PointMatrix& points);
PointMatrix parse_point_matrix_csv(const std::string& text);

// Same element-code format; one row per generator-matrix row.
std::string generator_matrix_csv(const Field& field, const GeneratorMatrix& g);

std::string spectrum_csv(const WeightDistribution& wd);

const char* to_string(Provenance p) noexcept;

Json to_json(const CountTriple& c);
Json to_json(const BoundReport& b);
Json to_json(const IdentityReport& r);
Json to_json(const ValueProfile& v);
Json to_json(const FactoredRational& z);
Json to_json(const RatioReport& r);
Json to_json(const TowerReport& r);
Json to_json(const RecursionReport& r);
Json to_json(const WeightDistribution& wd);  // {"n":..,"k":..,"weights":{"w":count}}
Json to_json(const TwoWeightReport& r);
Json to_json(const TssCodeReport& r);

}  // namespace diagsurf
