#pragma once

#include <json.hpp>

#include "skewkit/composition.hpp"
#include "skewkit/diagram.hpp"
#include "skewkit/equivalence.hpp"
#include "skewkit/ribbon.hpp"
#include "skewkit/schur.hpp"

namespace skewkit {

using json = nlohmann::ordered_json;

// {"lambda":[..],"mu":[..]} or {"cells":[[i,j],...]}; throws InvalidInput.
SkewDiagram diagram_from_json(const json& j);
SkewDiagram diagram_from_string(const std::string& text);
json diagram_to_json(const SkewDiagram& d);

CellList cells_from_json(const json& j);
json cells_to_json(const CellList& cells);

// Sorted list of {"partition":[..],"coeff":n}; the classifier fingerprint.
json schur_to_json(const SchurPoly& f);
SchurPoly schur_from_json(const json& j);

// Anchor spec for W inside E:
//   null, "empty", [] or {}           -> W = ∅
//   {"ne":[[i,j],..],"sw":[[i,j],..]} -> explicit copies in E's coordinates
//   a diagram ({"lambda"..} or {"cells"..}) -> that shape, anchored at E's corners
WPlacement placement_from_json(const SkewDiagram& E, const json& anchor);
WPlacement placement_from_string(const SkewDiagram& E, const std::string& text);
json placement_to_json(const WPlacement& pl);

json hypotheses_to_json(const HypothesisReport& rep);
json class_to_json(const EquivalenceClass& cls);
json strip_interval_to_json(const StripInterval& s);

}  // namespace skewkit
