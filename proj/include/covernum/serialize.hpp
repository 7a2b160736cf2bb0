#pragma once

#include <json.hpp>

#include "covernum/covers.hpp"
#include "covernum/recognizers.hpp"
#include "covernum/solver.hpp"

namespace covernum {

using Json = nlohmann::ordered_json;

Json vertices_json(VertexMask mask);
Json to_json(const Coloring& coloring);
Json to_json(const ClassWitness& witness);
Json to_json(const OddHole& hole);
/// {"class", "formula", "parts", "witnesses"}; parts are lists of sorted [u,v] pairs.
Json to_json(const CoverCertificate& cert);
Json to_json(const SolveResult& result);

}  // namespace covernum
