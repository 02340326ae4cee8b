#include "p1inv/json_io.hpp"

#include <limits>

#include "p1inv/error.hpp"

namespace p1inv::json {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

int to_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rational rational_from(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad("coefficients must be rational strings such as \"-3/4\"");
}

std::vector<Edge> edges_from(const Json& j) {
  if (!j.is_array()) bad("edges must be an array of [tail, head] pairs");
  std::vector<Edge> edges;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) bad("each edge must be a [tail, head] pair");
    edges.push_back({to_int(e[0], "vertex"), to_int(e[1], "vertex")});
  }
  return edges;
}

OrderedJson edges_to(const std::vector<Edge>& edges) {
  OrderedJson out = OrderedJson::array();
  for (const Edge& e : edges) out.push_back({e.tail, e.head});
  return out;
}

}  // namespace

OrderedJson graph_to_json(const Graph& g) {
  OrderedJson out;
  out["n"] = g.n();
  out["edges"] = edges_to(g.edges());
  return out;
}

Graph graph_from_json(const Json& j) {
  return Graph(to_int(field(j, "n"), "n"), edges_from(field(j, "edges")));
}

OrderedJson combination_to_json(const GraphCombination& c) {
  OrderedJson out;
  out["n"] = c.n();
  out["degree"] = c.degree();
  OrderedJson terms = OrderedJson::array();
  for (const auto& [g, coeff] : c.terms()) {
    OrderedJson t;
    t["coeff"] = to_string(coeff);
    t["edges"] = edges_to(g.edges());
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

GraphCombination combination_from_json(const Json& j) {
  const int n = to_int(field(j, "n"), "n");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  std::vector<int> degree;
  if (j.contains("degree")) {
    degree = j["degree"].get<std::vector<int>>();
  } else if (!terms.empty()) {
    degree = multidegree(Graph(n, edges_from(field(terms[0], "edges"))));
  } else {
    degree.assign(static_cast<std::size_t>(n), 0);
  }
  GraphCombination c(n, degree);
  for (const auto& t : terms) c.add(Graph(n, edges_from(field(t, "edges"))), rational_from(field(t, "coeff")));
  return c;
}

OrderedJson configuration_to_json(const Configuration& c) {
  OrderedJson pts = OrderedJson::array();
  for (const auto& p : c.points()) pts.push_back({to_string(p.u), to_string(p.v)});
  OrderedJson out;
  out["points"] = std::move(pts);
  return out;
}

Configuration configuration_from_json(const Json& j) {
  if (j.is_string()) return Configuration::parse_affine_list(j.get<std::string>());
  const Json& pts = field(j, "points");
  if (!pts.is_array()) bad("points must be an array");
  std::vector<ProjectivePoint> out;
  for (const auto& p : pts) {
    if (p.is_array() && p.size() == 2) {
      out.push_back({rational_from(p[0]), rational_from(p[1])});
    } else if (p.is_string() && (p == "inf" || p == "infinity")) {
      out.push_back(ProjectivePoint::infinity());
    } else if (p.is_string() || p.is_number_integer()) {
      out.push_back(ProjectivePoint::affine(rational_from(p)));
    } else {
      bad("each point must be a [u, v] pair");
    }
  }
  return Configuration(std::move(out));
}

OrderedJson polynomial_to_json(const GraphPolynomial& p) {
  OrderedJson out;
  out["n"] = p.n();
  OrderedJson terms = OrderedJson::array();
  for (const auto& [m, coeff] : p.terms()) {
    OrderedJson t;
    t["coeff"] = to_string(coeff);
    OrderedJson mono = OrderedJson::array();
    for (const auto& g : m) mono.push_back(graph_to_json(g.graph()));
    t["monomial"] = std::move(mono);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

GraphPolynomial polynomial_from_json(const Json& j) {
  const int n = to_int(field(j, "n"), "n");
  GraphPolynomial p(n);
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  for (const auto& t : terms) {
    std::vector<Graph> factors;
    for (const auto& g : field(t, "monomial")) factors.push_back(graph_from_json(g));
    p.add(factors, rational_from(field(t, "coeff")));
  }
  return p;
}

OrderedJson product_to_json(const MatchingProduct& p) {
  OrderedJson out;
  out["coeff"] = to_string(p.coeff);
  OrderedJson factors = OrderedJson::array();
  for (const auto& f : p.factors) factors.push_back(graph_to_json(f));
  out["factors"] = std::move(factors);
  return out;
}

MatchingProduct product_from_json(const Json& j, int n) {
  MatchingProduct p{rational_from(field(j, "coeff")), {}};
  for (const auto& f : field(j, "factors")) {
    Graph g = graph_from_json(f);
    if (g.n() != n) throw Error(ErrorKind::VertexCountMismatch, "factor on the wrong vertex count");
    p.factors.push_back(std::move(g));
  }
  return p;
}

OrderedJson certificate_to_json(const MembershipResult& r, const NoncrossingBasis& basis) {
  OrderedJson out = OrderedJson::array();
  for (const auto& term : r.certificate) {
    OrderedJson t;
    t["coeff"] = to_string(term.coeff);
    t["generator_index"] = term.generator_index;
    OrderedJson mono = OrderedJson::array();
    for (std::size_t idx : term.cofactor) mono.push_back(graph_to_json(basis.matching(idx).graph()));
    t["cofactor_monomial"] = std::move(mono);
    out.push_back(std::move(t));
  }
  return out;
}

OrderedJson matrix_to_json(const RationalMatrix& m) {
  OrderedJson rows = OrderedJson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    OrderedJson row = OrderedJson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

OrderedJson chart_to_json(const ChartPoint& p) {
  OrderedJson out;
  out["m"] = p.m;
  OrderedJson rows = OrderedJson::array();
  for (int i = 2; i <= p.m; ++i) rows.push_back(i);
  OrderedJson cols = OrderedJson::array();
  for (int j = p.m + 1; j < 2 * p.m; ++j) cols.push_back(j);
  out["rows_i"] = std::move(rows);
  out["cols_j"] = std::move(cols);
  out["W"] = matrix_to_json(p.W);
  out["Z"] = matrix_to_json(p.Z);
  return out;
}

OrderedJson chart_report_to_json(const ChartReport& r) {
  OrderedJson out;
  out["rank_one"] = r.rank_one;
  out["z_identity"] = r.z_identity;
  out["minors_checked"] = r.minors_checked;
  out["entries_checked"] = r.entries_checked;
  OrderedJson skipped = OrderedJson::array();
  for (const auto& [i, j] : r.skipped) skipped.push_back({i, j});
  out["skipped"] = std::move(skipped);
  out["ok"] = r.ok();
  return out;
}

OrderedJson integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

OrderedJson trace_to_json(const DegreeTrace& t) {
  OrderedJson out;
  out["weights"] = t.weights;
  out["rule"] = to_string(t.rule);
  out["value"] = integer_to_json(t.value);
  if (t.rule == DegreeTrace::Rule::Split) out["gamma"] = edges_to(t.gamma);
  if (!t.branches.empty()) {
    OrderedJson branches = OrderedJson::array();
    for (const auto& b : t.branches) {
      OrderedJson bj;
      bj["pair"] = {b.j, b.k};
      bj["multiplicity"] = b.multiplicity;
      bj["contributes"] = b.contributes;
      if (b.child) bj["child"] = trace_to_json(*b.child);
      branches.push_back(std::move(bj));
    }
    out["branches"] = std::move(branches);
  }
  return out;
}

}  // namespace p1inv::json
