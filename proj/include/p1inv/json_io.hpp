#pragma once

#include <json.hpp>

#include "p1inv/chart.hpp"
#include "p1inv/combination.hpp"
#include "p1inv/degree.hpp"
#include "p1inv/evaluation.hpp"
#include "p1inv/graph.hpp"
#include "p1inv/kempe.hpp"
#include "p1inv/linalg.hpp"
#include "p1inv/relations.hpp"

namespace p1inv::json {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

// Readers throw ParseError on malformed documents and the usual module errors
// (LoopEdge, VertexOutOfRange, ...) on well-formed but invalid content.

OrderedJson graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

OrderedJson combination_to_json(const GraphCombination& c);
GraphCombination combination_from_json(const Json& j);

OrderedJson configuration_to_json(const Configuration& c);
/// Accepts {"points": [["u","v"], ...]} or the shorthand string "0,1,inf".
Configuration configuration_from_json(const Json& j);

OrderedJson polynomial_to_json(const GraphPolynomial& p);
GraphPolynomial polynomial_from_json(const Json& j);

OrderedJson product_to_json(const MatchingProduct& p);
MatchingProduct product_from_json(const Json& j, int n);

OrderedJson certificate_to_json(const MembershipResult& r, const NoncrossingBasis& basis);

OrderedJson matrix_to_json(const RationalMatrix& m);
OrderedJson chart_to_json(const ChartPoint& p);
OrderedJson chart_report_to_json(const ChartReport& r);

OrderedJson trace_to_json(const DegreeTrace& t);

/// Integers that fit are emitted as JSON numbers, larger ones as strings.
OrderedJson integer_to_json(const Integer& z);

}  // namespace p1inv::json
