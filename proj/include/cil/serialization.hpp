#pragma once

#include "cil/betti_table.hpp"
#include "cil/complex.hpp"
#include "cil/graph.hpp"
#include "cil/ideal.hpp"
#include "cil/resolutions.hpp"
#include "cil/shellings.hpp"

#include <json.hpp>

#include <string_view>

namespace cil {

using Json = nlohmann::json;

// Malformed documents raise InvalidInput.

/// {"n": 5, "edges": [[1,2],[2,3]]}, plus "vertices" when not every index is a vertex.
Json to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

/// {"n": 4, "gens": [[1,3],[1,4],[2,4]]}
Json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const Json& doc);

/// {"n": 4, "facets": [[1,2],[2,3]]}
Json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& doc);

/// {"subject": "ideal", "entries": [{"i": 0, "j": 2, "b": 3}]}
Json to_json(const BettiTable& table);
BettiTable betti_from_json(const Json& doc);

/// {"n": 4, "order": [[1,4],[1,3]], "sets": [[],[4]]}
Json to_json(const LinearQuotientOrder& certificate);
LinearQuotientOrder linear_quotients_from_json(const Json& doc);

/// {"n": 4, "order": [[2,3],[3,4]]}
Json to_json(const ShellingOrder& order, int n);
ShellingOrder shelling_from_json(const Json& doc);

/// Graph specs: path:N, cycle:N, complete:N, chordal:N:SEED, complement:SPEC, file:PATH.
Graph parse_graph_spec(std::string_view spec);

}  // namespace cil
