// JSON views of the library's value types. Big integers are emitted as
// decimal strings so nothing is squeezed through 53-bit doubles; key order
// is alphabetical (nlohmann's default), so output is byte-stable.
#pragma once

#include <json.hpp>

#include "padic/polygon.hpp"
#include "padic/solver.hpp"
#include "padic/tetra.hpp"
#include "padic/tree.hpp"

namespace padic {

nlohmann::json poly_to_json(const SparsePoly& f);
SparsePoly poly_from_json(const nlohmann::json& j);

nlohmann::json polygon_to_json(const std::vector<PolygonEdge>& edges);
nlohmann::json tree_to_json(const NodalTree& tree);
nlohmann::json root_to_json(const ApproxRoot& r);
nlohmann::json report_to_json(const SolveReport& rep);

/// Every separation/valuation bound that applies to f at p.
nlohmann::json bounds_to_json(const SparsePoly& f, const mpz_class& p);

nlohmann::json separation_to_json(const TetranomialInstance& inst,
                                  const SeparationResult& sep);

}  // namespace padic
