#pragma once

#include <nlohmann/json.hpp>

#include "wesym/classify.hpp"
#include "wesym/code.hpp"
#include "wesym/invring.hpp"
#include "wesym/symgroup.hpp"
#include "wesym/tables.hpp"

// JSON forms of the result types. Big integers and rationals are decimal
// strings; complex numbers use the "(re,im)@p<bits>" form, exact at their
// precision. from_json(to_json(x)) reproduces x.
namespace wesym::json {

using nlohmann::json;

json to_json(const WeightEnumerator& w);
WeightEnumerator enumerator_from_json(const json& j);

json to_json(const HomPoly& p);
HomPoly poly_from_json(const json& j);

json to_json(const SymmetryGroup& g, const std::optional<CrossRatioCertificate>& cert = {});
SymmetryGroup group_from_json(const json& j);

json to_json(const InvariantDecomposition& d);
InvariantDecomposition decomposition_from_json(const json& j);

json to_json(const InfiniteCaseReport& r);
InfiniteCaseReport report_from_json(const json& j);

json to_json(const TableRun& run);

}  // namespace wesym::json
