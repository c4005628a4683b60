#pragma once

// JSON wire formats shared by the CLI: families, circuits, orders, halfspace
// systems, point representations, verification reports.  Rationals travel as
// canonical "p/q" strings.

#include <string>

#include "json.hpp"
#include "orthantgeo/ideals.hpp"
#include "orthantgeo/realization.hpp"
#include "orthantgeo/verifier.hpp"

namespace og {

using Json = nlohmann::json;

// {"universe": ["1","2"], "sets": [[], ["1"], ...]}
// Rejects labels outside the universe and duplicate sets.
SetFamily family_from_json(const Json& j);
Json family_to_json(const SetFamily& f);

// {"stem": ["1","2","3"], "root": "2"}
Json circuits_to_json(const Universe& u, std::span<const RootedCircuit> circuits);
std::vector<RootedCircuit> circuits_from_json(const Universe& u, const Json& j);

Json orders_to_json(const Universe& u, std::span<const TotalOrder> orders);

Json system_to_json(const HalfspaceSystem& sys);
HalfspaceSystem system_from_json(const Json& j);

Json point_representation_to_json(const PointRepresentation& rep);
PointRepresentation point_representation_from_json(const Json& j);

Json report_to_json(const VerificationReport& rep, int n);

Json axiom_report_to_json(const AxiomReport& rep, const Universe& u);

Json embed_result_to_json(const EmbedResult& res);

// Tree input: {"edges": [["a","b"], ...], "root": "a"}
void tree_from_json(const Json& j, std::vector<std::pair<std::string, std::string>>& edges,
                    std::string& root);

}  // namespace og
