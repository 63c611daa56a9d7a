#pragma once

// JSON and Graphviz views of the library's value types.

#include <json.hpp>

#include <string>

#include "tangency/cells.hpp"
#include "tangency/classifier.hpp"
#include "tangency/composition.hpp"
#include "tangency/markers.hpp"
#include "tangency/poset.hpp"
#include "tangency/trajectory.hpp"

namespace tangency {

using Json = nlohmann::ordered_json;

Json to_json(const Composition& w);
Composition composition_from_json(const Json& j);

Json to_json(const Morphism& m);
Json to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);

Json to_json(const FVector& f);
Json to_json(const StarComplex& s);
Json to_json(const MarkedComposition& m);
MarkedComposition marked_from_json(const Json& j);

Json to_json(const ProductLabel& label);
Json to_json(const TrajectoryComplex& t);
Json to_json(const CellComplex& c);

Json to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const Json& j);
Json to_json(const IsolatedRoot& r);
Json to_json(const NegativityComponent& c);
Json to_json(const FamilyReport& r);

/// Graphviz digraphs with one rank=same subgraph per grade. Edges point
/// from the bigger (more generic) element to the smaller one.
std::string to_dot(const FinitePoset& p);
std::string to_dot(const StarComplex& s);
std::string to_dot(const CellComplex& c, const std::string& name);

}  // namespace tangency
