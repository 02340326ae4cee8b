#include "p1inv/relations.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>

#include "p1inv/error.hpp"

namespace p1inv {

// ---------------------------------------------------------------------------
// GraphPolynomial

void GraphPolynomial::add_monomial(Monomial m, const Rational& coeff) {
  if (coeff == 0) return;
  const int k = static_cast<int>(m.size());
  if (degree_ && *degree_ != k) {
    throw Error(ErrorKind::DegreeMismatch,
                "monomial of degree " + std::to_string(k) + " in polynomial of degree " + std::to_string(*degree_));
  }
  for (const auto& g : m) {
    if (g.n() != n_) throw Error(ErrorKind::VertexCountMismatch, "factor on wrong vertex count");
  }
  std::sort(m.begin(), m.end());
  degree_ = k;
  auto [it, inserted] = terms_.try_emplace(std::move(m), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  if (terms_.empty()) degree_.reset();
}

void GraphPolynomial::add(const std::vector<Graph>& factors, const Rational& coeff) {
  Monomial m;
  m.reserve(factors.size());
  int sign = 1;
  for (const auto& f : factors) {
    auto c = canonicalize(f);
    sign *= c.sign;
    m.push_back(std::move(c.graph));
  }
  add_monomial(std::move(m), sign == 1 ? Rational(coeff) : Rational(-coeff));
}

void GraphPolynomial::add(const GraphPolynomial& other, const Rational& scale) {
  if (other.n_ != n_) throw Error(ErrorKind::VertexCountMismatch, "polynomials on different vertex counts");
  for (const auto& [m, c] : other.terms_) add_monomial(m, Rational(c * scale));
}

bool GraphPolynomial::is_matching_polynomial() const {
  for (const auto& [m, c] : terms_) {
    for (const auto& g : m) {
      if (!is_perfect_matching(g.graph())) return false;
    }
  }
  return true;
}

std::string to_string(const GraphPolynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, coeff] : p.terms()) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = abs(coeff);
    if (mag != 1) os << to_string(mag) << "*";
    for (const auto& g : m) os << "[" << to_string(g.graph()) << "]";
  }
  return os.str();
}

Rational evaluate_polynomial(const GraphPolynomial& p, const BracketTable& table) {
  if (table.n() != p.n()) throw Error(ErrorKind::LengthMismatch, "configuration size differs from n");
  Rational total = 0;
  for (const auto& [m, coeff] : p.terms()) {
    Rational term = coeff;
    for (const auto& g : m) term *= table.evaluate(g.graph());
    total += term;
  }
  return total;
}

Rational evaluate_polynomial(const GraphPolynomial& p, const Configuration& c) {
  return evaluate_polynomial(p, BracketTable(c));
}

// ---------------------------------------------------------------------------
// Non-crossing variables

NoncrossingBasis::NoncrossingBasis(int n) : n_(n) {
  if (n % 2 != 0) throw Error(ErrorKind::OddVertexCount, std::to_string(n));
  const std::vector<int> ones(static_cast<std::size_t>(n), 1);
  matchings_ = enumerate_noncrossing(n, ones);
  for (std::size_t i = 0; i < matchings_.size(); ++i) index_.emplace(matchings_[i], i);
}

std::optional<std::size_t> NoncrossingBasis::index_of(const CanonicalGraph& g) const {
  if (auto it = index_.find(g); it != index_.end()) return it->second;
  return std::nullopt;
}

namespace {

void multisets_rec(std::size_t count, int k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < count; ++i) {
    cur.push_back(i);
    multisets_rec(count, k, i, cur, out);
    cur.pop_back();
  }
}

std::vector<std::size_t> insert_sorted(std::vector<std::size_t> key, std::size_t idx) {
  key.insert(std::upper_bound(key.begin(), key.end(), idx), idx);
  return key;
}

}  // namespace

std::vector<std::vector<std::size_t>> NoncrossingBasis::monomials(int k) const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  if (k < 0) return out;
  multisets_rec(matchings_.size(), k, 0, cur, out);
  return out;
}

void NcPolynomial::add(const std::vector<std::size_t>& key, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms.erase(it);
  }
}

RationalVector NcPolynomial::coordinates(const std::vector<std::vector<std::size_t>>& monomials) const {
  RationalVector v(monomials.size());
  for (const auto& [key, c] : terms) {
    auto it = std::lower_bound(monomials.begin(), monomials.end(), key);
    if (it == monomials.end() || *it != key) {
      throw Error(ErrorKind::DimensionMismatch, "monomial outside the coordinate list");
    }
    v[static_cast<std::size_t>(it - monomials.begin())] = c;
  }
  return v;
}

GraphPolynomial NcPolynomial::to_graph_polynomial(const NoncrossingBasis& basis) const {
  GraphPolynomial p(n);
  for (const auto& [key, c] : terms) {
    Monomial m;
    for (std::size_t i : key) m.push_back(basis.matching(i));
    p.add_monomial(std::move(m), c);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Relation families

namespace {

void require_even(int n) {
  if (n % 2 != 0) throw Error(ErrorKind::OddVertexCount, std::to_string(n));
}

// Matchings of an arbitrary sorted vertex set, relabeled from 1..|set|.
std::vector<std::vector<Edge>> relabeled(const std::vector<CanonicalGraph>& on_small,
                                         const std::vector<int>& vertices) {
  std::vector<std::vector<Edge>> out;
  out.reserve(on_small.size());
  for (const auto& g : on_small) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back({vertices[e.tail - 1], vertices[e.head - 1]});
    out.push_back(std::move(edges));
  }
  return out;
}

std::vector<std::vector<Edge>> all_matchings_of(const std::vector<int>& vertices) {
  return relabeled(enumerate_perfect_matchings(static_cast<int>(vertices.size())), vertices);
}

std::vector<std::vector<Edge>> noncrossing_matchings_of(const std::vector<int>& vertices) {
  const std::vector<int> ones(vertices.size(), 1);
  return relabeled(enumerate_noncrossing(static_cast<int>(vertices.size()), ones), vertices);
}

Graph join(int n, std::initializer_list<const std::vector<Edge>*> parts) {
  std::vector<Edge> edges;
  for (const auto* p : parts) edges.insert(edges.end(), p->begin(), p->end());
  return Graph(n, std::move(edges));
}

void four_subsets(int n, const std::function<void(const std::array<int, 4>&)>& visit) {
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) visit({i, j, k, l});
}

std::vector<int> complement(int n, const std::array<int, 4>& quad) {
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v) {
    if (std::find(quad.begin(), quad.end(), v) == quad.end()) rest.push_back(v);
  }
  return rest;
}

}  // namespace

std::vector<GraphCombination> plucker_linear_relations(int n) {
  require_even(n);
  if (n < 4) throw Error(ErrorKind::VertexCountTooSmall, "need n >= 4");
  std::vector<GraphCombination> out;
  const std::vector<int> ones(static_cast<std::size_t>(n), 1);
  four_subsets(n, [&](const std::array<int, 4>& q) {
    const auto [i, j, k, l] = q;
    const std::vector<Edge> d1{{i, j}, {k, l}};
    const std::vector<Edge> d2{{i, k}, {j, l}};
    const std::vector<Edge> d3{{i, l}, {j, k}};
    for (const auto& rest : all_matchings_of(complement(n, q))) {
      GraphCombination rel(n, ones);
      rel.add(join(n, {&d1, &rest}), 1);
      rel.add(join(n, {&d2, &rest}), -1);
      rel.add(join(n, {&d3, &rest}), 1);
      out.push_back(std::move(rel));
    }
  });
  return out;
}

std::vector<GraphPolynomial> simple_binomial_relations(int n) {
  require_even(n);
  if (n < 4) throw Error(ErrorKind::VertexCountTooSmall, "need n >= 4");
  std::vector<GraphPolynomial> out;
  std::set<GraphPolynomial::Terms> seen;
  four_subsets(n, [&](const std::array<int, 4>& q) {
    const auto [a1, a2, a3, a4] = q;
    const std::vector<Edge> delta1{{a1, a2}, {a3, a4}};
    const std::vector<Edge> delta2{{a1, a4}, {a2, a3}};
    const auto gammas = noncrossing_matchings_of(complement(n, q));
    for (std::size_t x = 0; x < gammas.size(); ++x) {
      for (std::size_t y = x + 1; y < gammas.size(); ++y) {
        GraphPolynomial rel(n);
        rel.add({join(n, {&gammas[x], &delta1}), join(n, {&gammas[y], &delta2})}, 1);
        rel.add({join(n, {&gammas[x], &delta2}), join(n, {&gammas[y], &delta1})}, -1);
        if (rel.is_zero()) continue;
        if (rel.terms().begin()->second < 0) {
          GraphPolynomial flipped(n);
          flipped.add(rel, -1);
          rel = std::move(flipped);
        }
        if (seen.insert(rel.terms()).second) out.push_back(std::move(rel));
      }
    }
  });
  return out;
}

namespace {

GraphPolynomial segre_six() {
  Straightener straightener;
  const RelationSpace space = relation_space(6, 3, straightener);
  if (space.dimension() != 1) {
    throw std::logic_error("cubic relation space on six points has dimension " +
                           std::to_string(space.dimension()));
  }
  RationalVector v = space.kernel.front();
  // Primitive integer vector with a positive first nonzero entry.
  Integer lcm_den = 1;
  for (const auto& c : v) {
    if (c != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  }
  Integer gcd_num = 0;
  for (auto& c : v) {
    c *= lcm_den;
    if (c != 0) mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.get_num_mpz_t());
  }
  const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& c) { return c != 0; });
  if (*lead < 0) gcd_num = -gcd_num;
  const NoncrossingBasis basis(6);
  GraphPolynomial p(6);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Monomial m;
    for (std::size_t idx : space.monomials[i]) m.push_back(basis.matching(idx));
    p.add_monomial(std::move(m), Rational(v[i] / gcd_num));
  }
  return p;
}

}  // namespace

GraphPolynomial segre_cubic(int n) {
  if (n < 6) throw Error(ErrorKind::VertexCountTooSmall, "the cubic relation needs n >= 6");
  require_even(n);
  GraphPolynomial six = segre_six();
  if (n == 6) return six;
  std::vector<Edge> horizontal;
  for (int v = 7; v < n; v += 2) horizontal.push_back({v, v + 1});
  GraphPolynomial out(n);
  for (const auto& [m, c] : six.terms()) {
    std::vector<Graph> factors;
    for (const auto& f : m) factors.push_back(join(n, {&f.edges(), &horizontal}));
    out.add(factors, c);
  }
  return out;
}

GraphPolynomial odd_power_relation(int n, const Graph& matching, int power) {
  require_even(n);
  if (matching.n() != n || !is_perfect_matching(matching)) {
    throw Error(ErrorKind::NotAMatching, "expected a perfect matching on " + std::to_string(n) + " vertices");
  }
  if (power % 2 == 0 || power <= 1 || power >= n - 1) {
    throw Error(ErrorKind::BadExponent, "need an odd exponent strictly between 1 and n-1, got " +
                                            std::to_string(power));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::map<CanonicalGraph, std::int64_t> merged;
  std::vector<Edge> image(matching.edges().size());
  do {
    int inversions = 0;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    for (std::size_t e = 0; e < image.size(); ++e) {
      const Edge& src = matching.edges()[e];
      image[e] = {perm[src.tail - 1], perm[src.head - 1]};
    }
    auto c = canonicalize(Graph(n, image));
    // odd power: (s X)^i = s X^i
    merged[c.graph] += (inversions % 2 == 0 ? 1 : -1) * c.sign;
  } while (std::next_permutation(perm.begin(), perm.end()));

  GraphPolynomial out(n);
  for (const auto& [g, c] : merged) {
    if (c == 0) continue;
    out.add_monomial(Monomial(static_cast<std::size_t>(power), g), Rational(static_cast<long>(c)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Normal forms

GraphCombination expand_variable(const Graph& matching, Straightener& straightener) {
  if (!is_perfect_matching(matching)) throw Error(ErrorKind::NotAMatching, to_string(matching));
  return straightener.straighten(GraphCombination::of(matching));
}

GraphCombination expand_variable(const Graph& matching) {
  Straightener s;
  return expand_variable(matching, s);
}

namespace {

NcPolynomial reduce_with(const GraphPolynomial& p, const NoncrossingBasis& basis, Straightener& straightener) {
  NcPolynomial out;
  out.n = p.n();
  out.degree = p.degree().value_or(0);
  std::map<CanonicalGraph, std::vector<std::pair<std::size_t, Rational>>> expansions;
  auto expansion_of = [&](const CanonicalGraph& m) -> const std::vector<std::pair<std::size_t, Rational>>& {
    if (auto it = expansions.find(m); it != expansions.end()) return it->second;
    std::vector<std::pair<std::size_t, Rational>> terms;
    const GraphCombination expanded = expand_variable(m.graph(), straightener);
    for (const auto& [g, c] : expanded.terms()) {
      terms.emplace_back(*basis.index_of(g), c);
    }
    return expansions.emplace(m, std::move(terms)).first->second;
  };
  for (const auto& [monomial, coeff] : p.terms()) {
    std::map<std::vector<std::size_t>, Rational> partial{{{}, coeff}};
    for (const auto& factor : monomial) {
      const auto& exp = expansion_of(factor);
      std::map<std::vector<std::size_t>, Rational> next;
      for (const auto& [key, c] : partial) {
        for (const auto& [idx, d] : exp) {
          auto [it, inserted] = next.try_emplace(insert_sorted(key, idx), c * d);
          if (!inserted) it->second += c * d;
        }
      }
      partial = std::move(next);
    }
    for (const auto& [key, c] : partial) out.add(key, c);
  }
  return out;
}

}  // namespace

NcPolynomial reduce_to_noncrossing_vars(const GraphPolynomial& p, Straightener& straightener) {
  const NoncrossingBasis basis(p.n());
  return reduce_with(p, basis, straightener);
}

NcPolynomial reduce_to_noncrossing_vars(const GraphPolynomial& p) {
  Straightener s;
  return reduce_to_noncrossing_vars(p, s);
}

GraphCombination ring_normal_form(const GraphPolynomial& p, Straightener& straightener) {
  std::optional<GraphCombination> out;
  for (const auto& [monomial, coeff] : p.terms()) {
    CanonicalGraph product = CanonicalGraph::from_sorted(p.n(), {});
    for (const auto& f : monomial) product = multiply(product, f);
    if (!out) out.emplace(p.n(), multidegree(product));
    out->add(straightener.straighten(product), coeff);
  }
  if (!out) return GraphCombination(p.n(), std::vector<int>(static_cast<std::size_t>(p.n()), 0));
  return *std::move(out);
}

GraphCombination ring_normal_form(const GraphPolynomial& p) {
  Straightener s;
  return ring_normal_form(p, s);
}

RelationSpace relation_space(int n, int k, Straightener& straightener) {
  const NoncrossingBasis basis(n);
  RelationSpace space;
  space.n = n;
  space.degree = k;
  space.monomials = basis.monomials(k);
  const std::vector<int> target_degree(static_cast<std::size_t>(n), k);
  const auto targets = enumerate_noncrossing(n, target_degree);
  space.target_dimension = targets.size();
  std::map<CanonicalGraph, std::size_t> row_of;
  for (std::size_t i = 0; i < targets.size(); ++i) row_of.emplace(targets[i], i);

  RationalMatrix m(targets.size(), space.monomials.size());
  for (std::size_t col = 0; col < space.monomials.size(); ++col) {
    CanonicalGraph product = CanonicalGraph::from_sorted(n, {});
    for (std::size_t idx : space.monomials[col]) product = multiply(product, basis.matching(idx));
    const GraphCombination straightened = straightener.straighten(product);
    for (const auto& [g, c] : straightened.terms()) m.at(row_of.at(g), col) = c;
  }
  space.kernel = kernel_basis(m);
  return space;
}

RelationSpace quadric_relation_space(int n) {
  Straightener s;
  return relation_space(n, 2, s);
}

// ---------------------------------------------------------------------------
// Ideal membership

namespace {

struct ReducedSystem {
  NcPolynomial candidate;
  std::vector<NcPolynomial> generators;
};

void check_membership_degrees(const GraphPolynomial& candidate, const std::vector<GraphPolynomial>& generators,
                              int k) {
  if (!candidate.is_zero() && candidate.degree() != k) {
    throw Error(ErrorKind::DegreeMismatch, "candidate has degree " + std::to_string(*candidate.degree()) +
                                               ", expected " + std::to_string(k));
  }
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].n() != candidate.n()) {
      throw Error(ErrorKind::VertexCountMismatch, "generator " + std::to_string(j));
    }
    if (generators[j].degree().value_or(0) > k) {
      throw Error(ErrorKind::DegreeMismatch, "generator " + std::to_string(j) + " exceeds degree " +
                                                 std::to_string(k));
    }
  }
}

NcPolynomial times_monomial(const NcPolynomial& p, const std::vector<std::size_t>& mono) {
  NcPolynomial out;
  out.n = p.n;
  out.degree = p.degree + static_cast<int>(mono.size());
  for (const auto& [key, c] : p.terms) {
    std::vector<std::size_t> merged;
    std::merge(key.begin(), key.end(), mono.begin(), mono.end(), std::back_inserter(merged));
    out.add(merged, c);
  }
  return out;
}

}  // namespace

MembershipResult ideal_membership(const GraphPolynomial& candidate, const std::vector<GraphPolynomial>& generators,
                                  int k, Straightener& straightener) {
  check_membership_degrees(candidate, generators, k);
  const NoncrossingBasis basis(candidate.n());
  const auto targets = basis.monomials(k);
  auto row_index = [&](const std::vector<std::size_t>& key) {
    return static_cast<std::size_t>(std::lower_bound(targets.begin(), targets.end(), key) - targets.begin());
  };
  auto to_sparse = [&](const NcPolynomial& p) {
    SparseVector v;
    for (const auto& [key, c] : p.terms) v.emplace_back(row_index(key), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  };

  struct Column {
    std::size_t generator;
    std::vector<std::size_t> cofactor;
  };
  std::vector<Column> labels;
  std::vector<SparseVector> columns;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (generators[j].is_zero()) continue;
    const NcPolynomial reduced = reduce_with(generators[j], basis, straightener);
    if (reduced.is_zero()) continue;
    for (const auto& mono : basis.monomials(k - *generators[j].degree())) {
      columns.push_back(to_sparse(times_monomial(reduced, mono)));
      labels.push_back({j, mono});
    }
  }
  const SparseVector target = to_sparse(reduce_with(candidate, basis, straightener));

  MembershipResult result;
  result.columns = columns.size();
  result.rows = targets.size();
  const auto solution = in_span_sparse(target, columns, targets.size());
  if (!solution) return result;
  result.member = true;
  for (std::size_t c = 0; c < solution->size(); ++c) {
    if ((*solution)[c] == 0) continue;
    result.certificate.push_back({(*solution)[c], labels[c].generator, labels[c].cofactor});
  }
  return result;
}

MembershipResult ideal_membership(const GraphPolynomial& candidate, const std::vector<GraphPolynomial>& generators,
                                  int k) {
  Straightener s;
  return ideal_membership(candidate, generators, k, s);
}

bool verify_certificate(const GraphPolynomial& candidate, const std::vector<GraphPolynomial>& generators,
                        const MembershipResult& result, Straightener& straightener) {
  if (!result.member) return false;
  const NoncrossingBasis basis(candidate.n());
  NcPolynomial total;
  total.n = candidate.n();
  for (const auto& term : result.certificate) {
    if (term.generator_index >= generators.size()) return false;
    const NcPolynomial g = reduce_with(generators[term.generator_index], basis, straightener);
    for (const auto& [key, c] : times_monomial(g, term.cofactor).terms) total.add(key, c * term.coeff);
  }
  const NcPolynomial reduced = reduce_with(candidate, basis, straightener);
  for (const auto& [key, c] : reduced.terms) total.add(key, -c);
  return total.is_zero();
}

GraphPolynomial clump_map(const GraphPolynomial& p, const std::vector<std::vector<int>>& clumps) {
  validate_clumps(p.n(), clumps);
  GraphPolynomial out(static_cast<int>(clumps.size()));
  for (const auto& [monomial, coeff] : p.terms()) {
    std::vector<Graph> factors;
    bool vanishes = false;
    for (const auto& f : monomial) {
      auto image = clump_graph(f.graph(), clumps);
      if (!image) {
        vanishes = true;
        break;
      }
      factors.push_back(*std::move(image));
    }
    if (!vanishes) out.add(factors, coeff);
  }
  return out;
}

}  // namespace p1inv
