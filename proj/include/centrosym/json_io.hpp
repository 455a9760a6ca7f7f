#pragma once

#include <json.hpp>
#include <string>

#include "centrosym/cauchy.hpp"
#include "centrosym/eigenpairs.hpp"
#include "centrosym/inverse.hpp"
#include "centrosym/structure.hpp"
#include "centrosym/tensor.hpp"

namespace centro {

using Json = nlohmann::json;

// Interchange formats:
//   tensor       {"order": m, "dim": n, "entries": [n^m reals, last index fastest]}
//   vector       {"dim": n, "components": [...]}
//   cauchy spec  {"order": m, "generating": [...]}
// Readers throw InputError on schema violations.

Json to_json(const DenseTensor& t);
Json to_json(const Vector& v);
Json to_json(const StructureReport& r);
Json to_json(const Decomposition& d);
Json to_json(const CauchySpec& s);
Json to_json(const EigenPair& p);
Json to_json(const EigenSet& s);
Json to_json(const InverseResult& r);

DenseTensor tensor_from_json(const Json& j);
Vector vector_from_json(const Json& j);
CauchySpec cauchy_spec_from_json(const Json& j);

/// Serializes with every floating-point number written at 17 significant
/// digits and object keys in sorted order, so equal values always produce
/// identical bytes. `indent` < 0 gives the compact form.
std::string dump(const Json& j, int indent = 2);

/// "%.17g" text for `v`, with ".0" appended to integral values; "null" for
/// non-finite input.
std::string format_number(double v);

}  // namespace centro
