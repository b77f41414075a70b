#pragma once

#include <json.hpp>

#include "regcyc/bounds.hpp"
#include "regcyc/cycles.hpp"
#include "regcyc/density.hpp"
#include "regcyc/dtw.hpp"
#include "regcyc/menger.hpp"

namespace regcyc {

// Keys are emitted sorted (nlohmann::json's default object map) and all
// vertex arrays are sorted, so equal witnesses serialize byte-identically.
using Json = nlohmann::json;

Json to_json(const VertexSet& s);
Json to_json(const CyclePacking& packing);
Json to_json(const PathFamily& family);
Json to_json(const Separator& sep, const VertexSet& sources, const VertexSet& sinks);
Json to_json(const LinkedCertificate& cert);
Json to_json(const DenseWitness& witness);
Json to_json(const DensityParams& params);
Json to_json(const TraceReport& report);
Json to_json(const Theorem2Certificate& cert);
Json to_json(const BoundsReport& report);

CyclePacking packing_from_json(const Json& j);
PathFamily path_family_from_json(const Json& j);
Separator separator_from_json(const Json& j);
LinkedCertificate certificate_from_json(const Json& j);

/// Checks any witness document against d: a packing, a path family, a
/// separator, a linked-set certificate, or the combined `menger` output.
/// Malformed documents throw kParse.
bool verify_witness(const Json& j, const Digraph& d);

}  // namespace regcyc
