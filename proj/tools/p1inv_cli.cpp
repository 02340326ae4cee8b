// Command-line front end. Exit status: 0 success, 1 a check failed, 2 usage
// or input error.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "p1inv/acceptance.hpp"
#include "p1inv/chart.hpp"
#include "p1inv/degree.hpp"
#include "p1inv/error.hpp"
#include "p1inv/evaluation.hpp"
#include "p1inv/json_io.hpp"
#include "p1inv/kempe.hpp"
#include "p1inv/relations.hpp"
#include "p1inv/straightening.hpp"

using namespace p1inv;
using p1inv::json::Json;
using p1inv::json::OrderedJson;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 1;
  std::string format = "text";
  std::string out;
};

// A FILE argument: a path, "-" for stdin, or an inline JSON document.
Json read_document(const std::string& arg) {
  std::string text;
  if (arg == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else if (!arg.empty() && (arg.front() == '{' || arg.front() == '[' || arg.front() == '"')) {
    text = arg;
  } else {
    std::ifstream in(arg);
    if (!in) throw UsageError("cannot open " + arg);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("expected a comma-separated list of integers, got \"" + text + "\"");
    }
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::vector<std::vector<int>> parse_clumps(const std::string& text) {
  // "2,1,1,1,1" clump sizes, consecutive from vertex 1.
  std::vector<std::vector<int>> clumps;
  int next = 1;
  for (int size : parse_int_list(text)) {
    if (size < 1) throw UsageError("clump sizes must be positive");
    std::vector<int> clump;
    for (int k = 0; k < size; ++k) clump.push_back(next++);
    clumps.push_back(std::move(clump));
  }
  return clumps;
}

Configuration read_configuration(const std::string& config, const std::string& points) {
  if (!points.empty()) return Configuration::parse_affine_list(points);
  if (config.empty()) throw UsageError("give --config FILE or --points \"0,1,2,inf\"");
  return json::configuration_from_json(read_document(config));
}

class Output {
 public:
  explicit Output(const Globals& g) : globals_(g) {}

  bool json() const { return globals_.format == "json"; }

  void emit(const std::string& command, OrderedJson inputs, OrderedJson outputs, const std::string& text,
            OrderedJson checks = OrderedJson::array()) {
    std::string body;
    if (json()) {
      OrderedJson report;
      report["command"] = command;
      report["inputs"] = std::move(inputs);
      report["seed"] = globals_.seed;
      report["outputs"] = std::move(outputs);
      report["checks"] = std::move(checks);
      body = report.dump(2) + "\n";
    } else {
      body = text;
      if (!body.empty() && body.back() != '\n') body += '\n';
    }
    if (globals_.out.empty() || globals_.out == "-") {
      std::cout << body;
    } else {
      std::ofstream file(globals_.out);
      if (!file) throw UsageError("cannot write " + globals_.out);
      file << body;
    }
  }

 private:
  const Globals& globals_;
};

OrderedJson check(const std::string& name, bool passed) {
  OrderedJson c;
  c["name"] = name;
  c["passed"] = passed;
  return c;
}

std::string product_text(const MatchingProduct& p) {
  std::ostringstream os;
  os << to_string(p.coeff) << " *";
  for (const auto& f : p.factors) os << " [" << to_string(f) << "]";
  return os.str();
}

std::string trace_text(const DegreeTrace& t, int depth) {
  std::ostringstream os;
  const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
  os << pad << "(";
  for (std::size_t i = 0; i < t.weights.size(); ++i) os << (i ? "," : "") << t.weights[i];
  os << ") " << to_string(t.rule) << " -> " << t.value.get_str();
  if (t.rule == DegreeTrace::Rule::Split) os << "  Gamma = " << to_string(Graph(static_cast<int>(t.weights.size()), t.gamma));
  os << "\n";
  for (const auto& b : t.branches) {
    if (t.rule == DegreeTrace::Rule::Split) {
      os << pad << "  edge " << b.j << "-" << b.k << " x" << b.multiplicity;
      if (!b.contributes) {
        os << ": weight sum is half the total, contributes 0\n";
        continue;
      }
      os << ": contributes " << b.multiplicity << " * " << b.child->value.get_str() << "\n";
    }
    if (b.child) os << trace_text(*b.child, t.rule == DegreeTrace::Rule::Split ? depth + 2 : depth + 1);
  }
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_eval(Output& out, const std::string& input, const std::string& config, const std::string& points) {
  const Json doc = read_document(input);
  const Configuration c = read_configuration(config, points);
  Rational value;
  if (doc.contains("terms")) {
    value = evaluate_combination(json::combination_from_json(doc), c);
  } else {
    value = evaluate(json::graph_from_json(doc), c);
  }
  OrderedJson inputs;
  inputs["input"] = doc;
  inputs["configuration"] = json::configuration_to_json(c);
  OrderedJson outputs;
  outputs["value"] = to_string(value);
  out.emit("eval", inputs, outputs, to_string(value));
  return kOk;
}

int cmd_straighten(Output& out, const std::string& input) {
  const Json doc = read_document(input);
  const GraphCombination c =
      doc.contains("terms") ? json::combination_from_json(doc) : GraphCombination::of(json::graph_from_json(doc));
  const GraphCombination s = straighten(c);
  OrderedJson inputs;
  inputs["input"] = doc;
  out.emit("straighten", inputs, json::combination_to_json(s), to_string(s));
  return kOk;
}

int cmd_basis(Output& out, int n, const std::string& degree, bool count_only) {
  const std::vector<int> d = degree.empty() ? std::vector<int>(static_cast<std::size_t>(n), 1) : parse_int_list(degree);
  if (static_cast<int>(d.size()) != n) throw UsageError("--degree must have n entries");
  const auto graphs = enumerate_noncrossing(n, d);
  OrderedJson inputs;
  inputs["n"] = n;
  inputs["degree"] = d;
  OrderedJson outputs;
  outputs["count"] = graphs.size();
  std::string text = std::to_string(graphs.size());
  if (!count_only) {
    OrderedJson list = OrderedJson::array();
    text.clear();
    for (const auto& g : graphs) {
      list.push_back(json::graph_to_json(g.graph()));
      text += to_string(g.graph()) + "\n";
    }
    outputs["graphs"] = std::move(list);
  }
  out.emit("basis", inputs, outputs, text);
  return kOk;
}

int cmd_kempe(Output& out, const std::string& input, const std::string& weights) {
  const Json doc = read_document(input);
  const Graph g = json::graph_from_json(doc);
  const auto products =
      weights.empty() ? kempe_decompose(g) : kempe_decompose_weighted(g, WeightVector(parse_int_list(weights)));
  OrderedJson inputs;
  inputs["graph"] = doc;
  if (!weights.empty()) inputs["weights"] = parse_int_list(weights);
  OrderedJson list = OrderedJson::array();
  std::string text;
  for (const auto& p : products) {
    list.push_back(json::product_to_json(p));
    text += product_text(p) + "\n";
  }
  OrderedJson outputs;
  outputs["products"] = std::move(list);
  out.emit("kempe", inputs, outputs, text);
  return kOk;
}

Graph default_matching(int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; v += 2) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

int cmd_relations(Output& out, int n, const std::string& type, int power, const std::string& matching,
                  bool count_only) {
  OrderedJson inputs;
  inputs["n"] = n;
  inputs["type"] = type;
  OrderedJson list = OrderedJson::array();
  std::string text;
  std::size_t count = 0;
  if (type == "plucker") {
    for (const auto& r : plucker_linear_relations(n)) {
      list.push_back(json::combination_to_json(r));
      text += to_string(r) + "\n";
      ++count;
    }
  } else {
    std::vector<GraphPolynomial> polys;
    if (type == "simple-binomial") {
      polys = simple_binomial_relations(n);
    } else if (type == "segre") {
      polys.push_back(segre_cubic(n));
    } else if (type == "odd-power") {
      const Graph m = matching.empty() ? default_matching(n) : json::graph_from_json(read_document(matching));
      inputs["power"] = power;
      inputs["matching"] = json::graph_to_json(m);
      polys.push_back(odd_power_relation(n, m, power));
    } else {
      throw UsageError("--type must be plucker, simple-binomial, segre or odd-power");
    }
    for (const auto& p : polys) {
      list.push_back(json::polynomial_to_json(p));
      text += to_string(p) + "\n";
      ++count;
    }
  }
  OrderedJson outputs;
  outputs["count"] = count;
  if (!count_only) outputs["relations"] = std::move(list);
  out.emit("relations", inputs, outputs, count_only ? std::to_string(count) : text);
  return kOk;
}

GraphPolynomial named_polynomial(const std::string& name, int n) {
  if (name == "segre") return segre_cubic(n);
  if (name == "odd-power") return odd_power_relation(n, default_matching(n), 3);
  return json::polynomial_from_json(read_document(name));
}

int cmd_check_ideal(Output& out, const std::string& candidate, int n, const std::string& generators, int degree,
                    bool allow_heavy) {
  if (n >= 10 && !allow_heavy) {
    throw UsageError("membership for n >= 10 is a long computation; pass --allow-heavy to attempt it");
  }
  const GraphPolynomial cand = named_polynomial(candidate, n);
  std::vector<GraphPolynomial> gens;
  if (generators == "simple-binomial") {
    gens = simple_binomial_relations(n);
  } else {
    const Json doc = read_document(generators);
    if (!doc.is_array()) throw UsageError("--generators FILE must hold a JSON array of polynomials");
    for (const auto& p : doc) gens.push_back(json::polynomial_from_json(p));
  }
  const int k = degree > 0 ? degree : cand.degree().value_or(1);
  Straightener straightener;
  const MembershipResult r = ideal_membership(cand, gens, k, straightener);
  const bool verified = !r.member || verify_certificate(cand, gens, r, straightener);
  OrderedJson inputs;
  inputs["candidate"] = candidate;
  inputs["n"] = n;
  inputs["generators"] = generators;
  inputs["degree"] = k;
  OrderedJson outputs;
  outputs["member"] = r.member;
  outputs["spanning_vectors"] = r.columns;
  outputs["monomials"] = r.rows;
  if (r.member) outputs["certificate"] = json::certificate_to_json(r, NoncrossingBasis(n));
  OrderedJson checks = OrderedJson::array();
  if (r.member) checks.push_back(check("certificate verifies", verified));
  std::string text = r.member ? "member" : "not a member";
  if (r.member) text += " (certificate with " + std::to_string(r.certificate.size()) + " terms, " +
                        (verified ? "verified" : "FAILED verification") + ")";
  out.emit("check-ideal", inputs, outputs, text, checks);
  return verified ? kOk : kCheckFailed;
}

int cmd_degree(Output& out, const std::string& weights, bool trace) {
  const WeightVector w(parse_int_list(weights));
  DegreeCalculator calc;
  OrderedJson inputs;
  inputs["weights"] = std::vector<int>(w.values().begin(), w.values().end());
  OrderedJson outputs;
  std::string text;
  const bool boundary = is_boundary(w);
  if (trace) {
    const DegreeTrace t = calc.trace(w);
    outputs["degree"] = json::integer_to_json(t.value);
    outputs["trace"] = json::trace_to_json(t);
    text = t.value.get_str() + "\n" + trace_text(t, 0);
  } else {
    const Integer d = calc.degree(w);
    outputs["degree"] = json::integer_to_json(d);
    text = d.get_str();
  }
  outputs["boundary"] = boundary;
  if (boundary) text += "\n(boundary: some weight is half the total, so no configuration is stable)";
  out.emit("degree", inputs, outputs, text);
  return kOk;
}

int cmd_chart(Output& out, const std::string& config, const std::string& points) {
  const Configuration c = read_configuration(config, points);
  const ChartPoint p = chart_coordinates(c);
  const ChartReport report = verify_chart(p);
  OrderedJson inputs;
  inputs["configuration"] = json::configuration_to_json(c);
  OrderedJson outputs = json::chart_to_json(p);
  outputs["report"] = json::chart_report_to_json(report);
  OrderedJson checks = OrderedJson::array();
  checks.push_back(check("W has rank at most one", report.rank_one));
  checks.push_back(check("Z(W-1) = 1 entrywise", report.z_identity));
  std::ostringstream os;
  auto print = [&](const char* name, const RationalMatrix& m) {
    os << name << " (rows i = 2.." << p.m << ", columns j = " << p.m + 1 << ".." << 2 * p.m - 1 << "):\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      os << " ";
      for (std::size_t col = 0; col < m.cols(); ++col) os << " " << to_string(m.at(r, col));
      os << "\n";
    }
  };
  print("W", p.W);
  print("Z", p.Z);
  os << "rank one: " << (report.rank_one ? "yes" : "NO") << ", Z(W-1)=1: " << (report.z_identity ? "yes" : "NO");
  out.emit("chart", inputs, outputs, os.str(), checks);
  return report.ok() ? kOk : kCheckFailed;
}

int cmd_verify_all(Output& out, const Globals& globals, bool quick, bool timing) {
  const auto tier = quick ? acceptance::Tier::Quick : acceptance::Tier::Full;
  const auto results = acceptance::run_all(tier, globals.seed);
  OrderedJson inputs;
  inputs["tier"] = quick ? "quick" : "full";
  OrderedJson checks = OrderedJson::array();
  std::ostringstream os;
  bool all = true;
  for (const auto& r : results) {
    OrderedJson c = check("criterion " + std::to_string(r.id) + ": " + r.name, r.passed());
    c["limit_seconds"] = r.limit_seconds;
    if (timing) c["seconds"] = r.seconds;
    c["details"] = r.details;
    checks.push_back(std::move(c));
    os << "criterion " << r.id << " " << r.name << ": " << (r.passed() ? "PASS" : "FAIL");
    if (timing) os << " (" << r.seconds << " s, limit " << r.limit_seconds << " s)";
    os << "\n";
    for (const auto& line : r.details) os << "    " << line << "\n";
    all &= r.passed();
  }
  OrderedJson outputs;
  outputs["passed"] = all;
  out.emit("verify-all", inputs, outputs, os.str(), checks);
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of weighted points on the projective line"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals globals;
  app.add_option("--seed", globals.seed, "Seed for random sampling");
  app.add_option("--format", globals.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", globals.out, "Write the report to FILE instead of stdout");

  std::string input, config, points, degree_list, weights, type = "simple-binomial", matching, candidate = "segre",
                                                                  generators = "simple-binomial";
  int n = 0;
  int power = 3;
  int degree = 0;
  bool count_only = false, trace = false, quick = false, full = false, heavy = false, timing = false;

  auto* eval = app.add_subcommand("eval", "Evaluate a graph or combination at a configuration");
  eval->add_option("--input", input, "Graph or combination JSON (FILE, '-' or inline)")->required();
  eval->add_option("--config", config, "Configuration JSON");
  eval->add_option("--points", points, "Affine shorthand such as 0,1,2,inf");

  auto* straight = app.add_subcommand("straighten", "Rewrite onto non-crossing graphs");
  straight->add_option("--input", input, "Graph or combination JSON")->required();

  auto* basis = app.add_subcommand("basis", "Enumerate non-crossing graphs of a multidegree");
  basis->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(1, 64));
  basis->add_option("--degree", degree_list, "Multidegree, default all ones");
  basis->add_flag("--count", count_only, "Print only the number of graphs");

  auto* kempe = app.add_subcommand("kempe", "Decompose a regular graph into matching products");
  kempe->add_option("--input", input, "Graph JSON")->required();
  kempe->add_option("--weights", weights, "Weight vector for the lifted decomposition");

  auto* rel = app.add_subcommand("relations", "Generate relations");
  rel->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(2, 64));
  rel->add_option("--type", type, "plucker, simple-binomial, segre or odd-power")
      ->check(CLI::IsMember({"plucker", "simple-binomial", "segre", "odd-power"}));
  rel->add_option("--power", power, "Exponent for odd-power");
  rel->add_option("--matching", matching, "Matching JSON for odd-power (default 1-2 3-4 ...)");
  rel->add_flag("--count", count_only, "Print only the number of relations");

  auto* ideal = app.add_subcommand("check-ideal", "Decide ideal membership with a certificate");
  ideal->add_option("--candidate", candidate, "segre, odd-power, or polynomial JSON");
  ideal->add_option("--n", n, "Vertex count")->required()->check(CLI::Range(4, 64));
  ideal->add_option("--generators", generators, "simple-binomial or a JSON array of polynomials");
  ideal->add_option("--degree", degree, "Degree of the ideal piece (default: candidate degree)");
  ideal->add_flag("--allow-heavy", heavy, "Permit n >= 10");

  auto* deg = app.add_subcommand("degree", "Degree of the moduli space for a weight vector");
  deg->add_option("--weights", weights, "Comma-separated weights")->required();
  deg->add_flag("--trace", trace, "Print the recursion tree");

  auto* chart = app.add_subcommand("chart", "Chart coordinates W, Z and their identities");
  chart->add_option("--config", config, "Configuration JSON");
  chart->add_option("--points", points, "Affine shorthand such as 0,0,1,inf");

  auto* verify = app.add_subcommand("verify-all", "Run the acceptance suite");
  verify->add_flag("--quick", quick, "Reduced sample sizes");
  verify->add_flag("--full", full, "Full sample sizes (default)");
  verify->add_flag("--timing", timing, "Include wall-clock times (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Output out(globals);
  try {
    if (*eval) return cmd_eval(out, input, config, points);
    if (*straight) return cmd_straighten(out, input);
    if (*basis) return cmd_basis(out, n, degree_list, count_only);
    if (*kempe) return cmd_kempe(out, input, weights);
    if (*rel) return cmd_relations(out, n, type, power, matching, count_only);
    if (*ideal) return cmd_check_ideal(out, candidate, n, generators, degree, heavy);
    if (*deg) return cmd_degree(out, weights, trace);
    if (*chart) return cmd_chart(out, config, points);
    if (*verify) {
      if (quick && full) throw UsageError("--quick and --full are exclusive");
      return cmd_verify_all(out, globals, quick, timing);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
