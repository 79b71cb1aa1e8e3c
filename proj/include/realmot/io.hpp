#pragma once

#include <string>

#include "json.hpp"
#include "realmot/constructible.hpp"
#include "realmot/motivic.hpp"
#include "realmot/polyhedra.hpp"
#include "realmot/zeta.hpp"

namespace realmot {

using Json = nlohmann::ordered_json;

// Throws Errc::Parse on malformed text.
Json parse_json(const std::string& text);

// {"generators": [...], "morphisms": [...]}; both keys optional.
Context context_from_json(const Json& j);
Json context_to_json(const Context& ctx);

// {"base", "components": [{id, N, nu}], "strata": [{"I": [...], "plus", "minus", "unsigned"}]}.
// Class expressions are parsed in `ctx` over the datum's base.
ResolutionDatum datum_from_json(const Json& j, const Context& ctx);
Json datum_to_json(const ResolutionDatum& r);

// Keys "face:<id>:plus|minus|zero" mapping to class expressions over pt.
TorusClassTable table_from_json(const Json& j, const NewtonPolyhedron& np);
Json table_to_json(const TorusClassTable& t);

Json fan_to_json(const NewtonPolyhedron& np, const DualFan& fan);
Json series_to_json(const ZetaSeries& z);
Json report_to_json(const ValidationReport& r);
Json beta_to_json(const BetaResult& b);

ComplexPtr complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& k);
// {"values": {"i,j,k": n}} or {"constant": n}.
ConstructibleFunction function_from_json(const Json& j, ComplexPtr k);
Json function_to_json(const ConstructibleFunction& f);
// {"v": w, ...}, optionally wrapped as {"map": {...}}.
SimplicialMap map_from_json(const Json& j, ComplexPtr source, ComplexPtr target);
Json map_to_json(const SimplicialMap& h);
HeightedSurface surface_from_json(const Json& j);
Json surface_to_json(const HeightedSurface& m);

std::string simplex_key(const Simplex& s);
Simplex simplex_from_key(const std::string& key);

}  // namespace realmot
