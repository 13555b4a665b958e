#pragma once

#include <string>

#include "json.hpp"
#include "knotzeta/arc_graph.hpp"
#include "knotzeta/knot_model.hpp"
#include "knotzeta/laurent.hpp"
#include "knotzeta/twisted.hpp"
#include "knotzeta/verdict.hpp"

namespace knotzeta {

using Json = nlohmann::ordered_json;

/// {"<exponent>": coefficient}. Integers that fit in 64 bits are JSON
/// numbers; other rationals are "a/b" strings.
Json coefficients_json(const QPoly& p);
/// Prime-field coefficients as their representatives in [0, q).
Json coefficients_json(const FpPoly& p);

/// {"coeffs": {...}, "unit": "(-1)^s t^k"}.
Json canonical_json(const CanonicalPoly<Rational>& p);
Json canonical_json(const CanonicalPoly<Fp>& p);

Json diagram_json(const KnotDiagram& d);
Json graph_json(const ArcGraph& g);
std::string graph_dot(const ArcGraph& g);

Json verdict_json(const Verdict& v);

/// {"dim": m, "field": q, "images": {"x1": [[...]], ...}}
Json representation_json(const Representation& rho);
/// Inverse of representation_json; throws InputError on malformed documents.
Representation parse_representation(const Json& j);

}  // namespace knotzeta
