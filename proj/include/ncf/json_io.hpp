#pragma once

#include <string>

#include "json.hpp"
#include "ncf/bijections.hpp"
#include "ncf/forest.hpp"
#include "ncf/qpoly.hpp"
#include "ncf/sieving.hpp"

namespace ncf {

using Json = nlohmann::ordered_json;

/// {"n": <int>, "edges": [[u,v],...]} with u < v, edges sorted.
Json forest_to_json(const NonCrossingForest& forest);

/// Accepts edges in any order or orientation and normalizes them; the
/// result is validated like any other forest. Throws InputError on a
/// malformed object.
NonCrossingForest forest_from_json(const Json& j);

/// {"vertex": v} or {"vertex": v, "edge": [a,b]}.
Json mark_to_json(const Mark& mark);
Mark mark_from_json(const Json& j);

/// Integer as a JSON number when it fits in 64 bits, otherwise as a
/// decimal string.
Json bigint_to_json(const BigInt& x);

/// Coefficient list [c0, c1, ...] using bigint_to_json per entry.
Json qpoly_to_json(const QPoly& p);

/// {"n":..,"k":..,"rows":[{"d":..,"closed_form":..,"poly_eval":..,"brute":..,
///  "bijection":..,"agree":..}],"verdict":..}. Missing poly_eval/bijection
/// values are null.
Json report_to_json(const CspReport& report);
CspReport report_from_json(const Json& j);

}  // namespace ncf
