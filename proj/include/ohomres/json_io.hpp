#pragma once

#include <json.hpp>

#include "ohomres/cointerval.hpp"
#include "ohomres/nonnesting.hpp"
#include "ohomres/resolution.hpp"

namespace ohomres {

using json = nlohmann::ordered_json;

/// {"n": 4, "facets": [[1,2,4],[3,4]]}. Throws std::invalid_argument on malformed input.
Complex complex_from_json(const json& j);
json to_json(const Complex& h);

json to_json(const Monomial& m);
json to_json(const Hom& phi);
json to_json(const Cell& c);
/// {"n":..,"m":..,"cells":[{"parts":[[..],..],"dim":d,"label":[..]},..]}
json to_json(const PComplex& x);
/// {"m":..,"degree":..,"gens":[[e1..em],..]}
json to_json(const IdealGens& ideal);
/// {"m":..,"layers":[{"degree":i,"rows":..,"cols":..,"entries":[[row,col,sign,[e..]],..]},..]}
json to_json(const ResolutionExport& res);
/// {"r":..,"arcs":[[i,j],..]}
json to_json(const ArcDiagram& d);
ArcDiagram arc_diagram_from_json(const json& j);
json to_json(const CointervalWitness& w);
json to_json(const SheddingTree& t);
json to_json(const SheddingFailure& f);
json to_json(const RemovalCert& c);
json to_json(const CollapsePair& p);
/// Keyed by the canonical diagram string.
json to_json(const WeightTable& w);

}  // namespace ohomres
