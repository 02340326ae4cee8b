// Low-level module: structured values cross the boundary as JSON text and the
// Python package turns them into dicts and Fractions.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "p1inv/acceptance.hpp"
#include "p1inv/chart.hpp"
#include "p1inv/degree.hpp"
#include "p1inv/error.hpp"
#include "p1inv/evaluation.hpp"
#include "p1inv/json_io.hpp"
#include "p1inv/kempe.hpp"
#include "p1inv/relations.hpp"
#include "p1inv/straightening.hpp"

namespace py = pybind11;
using namespace p1inv;
using p1inv::json::Json;
using p1inv::json::OrderedJson;

namespace {

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

GraphCombination combination_or_graph(const Json& j) {
  if (j.contains("terms")) return json::combination_from_json(j);
  return GraphCombination::of(json::graph_from_json(j));
}

Graph standard_matching(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; v += 2) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

GraphPolynomial candidate_polynomial(const std::string& name, int n) {
  if (name == "segre") return segre_cubic(n);
  if (name == "odd-power") return odd_power_relation(n, standard_matching(n), 3);
  return json::polynomial_from_json(parse(name));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Graphical invariants of weighted points on the projective line";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  m.def("error_kind", [](const std::string& message) {
    return message.substr(0, message.find(':'));
  });

  m.def("degree", [](const std::vector<int>& w) { return moduli_degree(WeightVector(w)).get_str(); });
  m.def("degree_trace", [](const std::vector<int>& w) {
    DegreeCalculator calc;
    return json::trace_to_json(calc.trace(WeightVector(w))).dump();
  });
  m.def("is_boundary", [](const std::vector<int>& w) { return is_boundary(WeightVector(w)); });

  m.def("evaluate", [](const std::string& input, const std::string& points) {
    const Configuration c = Configuration::parse_affine_list(points);
    return to_string(evaluate_combination(combination_or_graph(parse(input)), c));
  });
  m.def("straighten", [](const std::string& input) {
    return json::combination_to_json(straighten(combination_or_graph(parse(input)))).dump();
  });
  m.def("noncrossing_graphs", [](int n, const std::vector<int>& degree) {
    OrderedJson out = OrderedJson::array();
    for (const auto& g : enumerate_noncrossing(n, degree)) out.push_back(json::graph_to_json(g.graph()));
    return out.dump();
  });
  m.def("kempe", [](const std::string& graph, const std::vector<int>& weights) {
    const Graph g = json::graph_from_json(parse(graph));
    const auto products = weights.empty() ? kempe_decompose(g) : kempe_decompose_weighted(g, WeightVector(weights));
    OrderedJson out = OrderedJson::array();
    for (const auto& p : products) out.push_back(json::product_to_json(p));
    return out.dump();
  });

  m.def("relations", [](int n, const std::string& type, int power) {
    OrderedJson out = OrderedJson::array();
    if (type == "plucker") {
      for (const auto& r : plucker_linear_relations(n)) out.push_back(json::combination_to_json(r));
    } else if (type == "simple-binomial") {
      for (const auto& r : simple_binomial_relations(n)) out.push_back(json::polynomial_to_json(r));
    } else if (type == "segre") {
      out.push_back(json::polynomial_to_json(segre_cubic(n)));
    } else if (type == "odd-power") {
      out.push_back(json::polynomial_to_json(odd_power_relation(n, standard_matching(n), power)));
    } else {
      throw py::value_error("type must be plucker, simple-binomial, segre or odd-power");
    }
    return out.dump();
  });

  m.def("check_ideal", [](const std::string& candidate, int n, int degree) {
    const GraphPolynomial cand = candidate_polynomial(candidate, n);
    const auto gens = simple_binomial_relations(n);
    const int k = degree > 0 ? degree : cand.degree().value_or(1);
    Straightener straightener;
    MembershipResult r;
    {
      py::gil_scoped_release release;
      r = ideal_membership(cand, gens, k, straightener);
    }
    OrderedJson out;
    out["member"] = r.member;
    out["spanning_vectors"] = r.columns;
    out["monomials"] = r.rows;
    if (r.member) {
      out["verified"] = verify_certificate(cand, gens, r, straightener);
      out["certificate"] = json::certificate_to_json(r, NoncrossingBasis(n));
    }
    return out.dump();
  });

  m.def("chart", [](const std::string& points) {
    const ChartPoint p = chart_coordinates(Configuration::parse_affine_list(points));
    OrderedJson out = json::chart_to_json(p);
    out["report"] = json::chart_report_to_json(verify_chart(p));
    return out.dump();
  });

  m.def("verify_all", [](bool quick, std::uint64_t seed) {
    std::vector<acceptance::CriterionResult> results;
    {
      py::gil_scoped_release release;
      results = acceptance::run_all(quick ? acceptance::Tier::Quick : acceptance::Tier::Full, seed);
    }
    OrderedJson out = OrderedJson::array();
    for (const auto& r : results) {
      OrderedJson c;
      c["id"] = r.id;
      c["name"] = r.name;
      c["passed"] = r.passed();
      c["details"] = r.details;
      out.push_back(std::move(c));
    }
    return out.dump();
  });
}
