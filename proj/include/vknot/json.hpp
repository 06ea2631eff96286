#pragma once

#include <json.hpp>

#include "vknot/construct.hpp"
#include "vknot/fuzz.hpp"
#include "vknot/invariants.hpp"
#include "vknot/surface.hpp"
#include "vknot/tangle.hpp"

namespace vknot {

using Json = nlohmann::ordered_json;

/// {"passages": [["O",1,1], ["U",1], ...]}; the sign rides on the first
/// occurrence of each crossing.
Json diagram_to_json(const LongDiagram& d);
/// Validated like Gauss-code text; throws MalformedJson on shape errors.
LongDiagram diagram_from_json(const Json& j);

/// {"A": [...], "B": [...]} with signs on first occurrences across A.B.
Json tangle_to_json(const TangleDiagram& e);
TangleDiagram tangle_from_json(const Json& j);

Json bundle_to_json(const InvariantBundle& k);
Json surface_to_json(const LongDiagram& d, const HomologyData& h);
Json report_to_json(const IdentityReport& r);
Json tangle_invariants_to_json(const TangleInvariants& ti);
Json bounds_to_json(const GenusBounds& g);
Json stratum_to_json(const Stratum& s);
Json fuzz_to_json(const FuzzReport& r);

}  // namespace vknot
