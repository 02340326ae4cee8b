#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "p1inv/linalg.hpp"
#include "p1inv/relations.hpp"

using namespace p1inv;

namespace {

Rational poly_at(const GraphPolynomial& p, const std::vector<oracle::Pt>& pts) {
  Rational total = 0;
  for (const auto& [m, coeff] : p.terms()) {
    Rational term = coeff;
    for (const auto& g : m) term *= oracle::eval(testing::pairs(g.graph()), pts);
    total += term;
  }
  return total;
}

bool vanishes(const GraphPolynomial& p, std::mt19937& rng, int samples = 10) {
  for (int s = 0; s < samples; ++s) {
    if (poly_at(p, oracle::random_points(p.n(), rng)) != 0) return false;
  }
  return true;
}

bool splits_noncrossing(const Graph& g) {
  const int n = g.n();
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 4) continue;
    std::vector<std::pair<int, int>> inside;
    std::vector<std::pair<int, int>> outside;
    bool straddles = false;
    for (const Edge& e : g.edges()) {
      const bool a = mask >> (e.tail - 1) & 1;
      const bool b = mask >> (e.head - 1) & 1;
      if (a != b) straddles = true;
      (a ? inside : outside).emplace_back(e.tail, e.head);
    }
    if (!straddles && oracle::noncrossing(inside) && oracle::noncrossing(outside)) return true;
  }
  return false;
}

GraphPolynomial as_polynomial(const GraphCombination& c) {
  GraphPolynomial p(c.n());
  for (const auto& [g, coeff] : c.terms()) p.add_monomial({g}, coeff);
  return p;
}

}  // namespace

TEST_CASE("graph polynomial bookkeeping") {
  GraphPolynomial p(4);
  CHECK(p.is_zero());
  CHECK_FALSE(p.degree().has_value());
  p.add({Graph(4, {{2, 1}, {3, 4}}), Graph(4, {{1, 3}, {2, 4}})}, 2);
  REQUIRE(p.terms().size() == 1);
  CHECK(p.terms().begin()->second == -2);
  CHECK(p.degree() == 2);
  p.add({Graph(4, {{1, 3}, {2, 4}}), Graph(4, {{1, 2}, {3, 4}})}, 2);
  CHECK(p.is_zero());
  p.add({Graph(4, {{1, 2}, {3, 4}})}, 1);
  CHECK_ERROR_KIND(p.add({Graph(4, {{1, 2}, {3, 4}}), Graph(4, {{1, 2}, {3, 4}})}, 1), ErrorKind::DegreeMismatch);
  CHECK(p.is_matching_polynomial());
}

TEST_CASE("linear exchange relations") {
  CHECK(plucker_linear_relations(4).size() == 1);
  CHECK(plucker_linear_relations(6).size() == 15);
  CHECK(plucker_linear_relations(8).size() == 70 * 3);
  std::mt19937 rng(1);
  Straightener s;
  for (int n : {4, 6, 8}) {
    for (const auto& r : plucker_linear_relations(n)) {
      CHECK(r.size() == 3);
      CHECK(s.straighten(r).is_zero());
      CHECK(reduce_to_noncrossing_vars(as_polynomial(r), s).is_zero());
      CHECK(vanishes(as_polynomial(r), rng, 2));
    }
  }
  CHECK_ERROR_KIND(plucker_linear_relations(5), ErrorKind::OddVertexCount);
}

TEST_CASE("simple binomial relations") {
  const auto b8 = simple_binomial_relations(8);
  CHECK(b8.size() == 35);
  CHECK(simple_binomial_relations(6).empty());
  std::mt19937 rng(2);
  Straightener s;
  for (const auto& b : b8) {
    CHECK(b.terms().size() == 2);
    CHECK(b.degree() == 2);
    CHECK(b.is_matching_polynomial());
    // Both monomials use the same edges, and each factor splits into a
    // non-crossing matching of a 4-set and one of its complement.
    std::vector<Edge> edge_sets[2];
    int side = 0;
    for (const auto& [m, c] : b.terms()) {
      for (const auto& g : m) {
        edge_sets[side].insert(edge_sets[side].end(), g.edges().begin(), g.edges().end());
        CHECK(splits_noncrossing(g.graph()));
      }
      ++side;
    }
    std::sort(edge_sets[0].begin(), edge_sets[0].end());
    std::sort(edge_sets[1].begin(), edge_sets[1].end());
    CHECK(edge_sets[0] == edge_sets[1]);
    CHECK(vanishes(b, rng));
    CHECK(ring_normal_form(b, s).is_zero());
  }
}

TEST_CASE("the 35 binomials span the quadric relations on 8 points") {
  Straightener s;
  const RelationSpace v = relation_space(8, 2, s);
  CHECK(v.monomials.size() == 105);
  CHECK(v.target_dimension == 91);
  CHECK(v.dimension() == 14);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& b : simple_binomial_relations(8)) rows.push_back(reduce_to_noncrossing_vars(b, s).coordinates(v.monomials));
  CHECK(oracle::rank(rows) == 14);
  rows.insert(rows.end(), v.kernel.begin(), v.kernel.end());
  CHECK(oracle::rank(rows) == 14);
}

TEST_CASE("quadric relation spaces") {
  CHECK(quadric_relation_space(6).dimension() == 0);
  CHECK(quadric_relation_space(6).monomials.size() == 15);
  const auto v4 = quadric_relation_space(4);
  CHECK(v4.monomials.size() == 3);
  CHECK(v4.target_dimension == 3);
  CHECK(v4.dimension() == 0);
}

TEST_CASE("cubic relation") {
  const auto s6 = segre_cubic(6);
  std::mt19937 rng(3);
  CHECK(s6.degree() == 3);
  CHECK(vanishes(s6, rng));
  CHECK(ring_normal_form(s6).is_zero());
  CHECK_FALSE(reduce_to_noncrossing_vars(s6).is_zero());
  // Primitive with a positive leading coefficient.
  CHECK(s6.terms().begin()->second > 0);
  Integer g = 0;
  for (const auto& [m, c] : s6.terms()) {
    CHECK(c.get_den() == 1);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  CHECK(g == 1);

  const auto s8 = segre_cubic(8);
  CHECK(s8.terms().size() == s6.terms().size());
  GraphPolynomial extended(8);
  for (const auto& [m, c] : s6.terms()) {
    std::vector<Graph> factors;
    for (const auto& f : m) {
      auto edges = f.edges();
      edges.push_back({7, 8});
      factors.emplace_back(8, edges);
    }
    extended.add(factors, c);
  }
  CHECK(s8 == extended);
  CHECK(vanishes(s8, rng));
  CHECK(ring_normal_form(s8).is_zero());
  CHECK_ERROR_KIND(segre_cubic(4), ErrorKind::VertexCountTooSmall);
}

TEST_CASE("odd power relation") {
  const Graph m(6, {{1, 2}, {3, 4}, {5, 6}});
  const auto p = odd_power_relation(6, m, 3);
  std::mt19937 rng(4);
  CHECK(vanishes(p, rng));
  CHECK(ring_normal_form(p).is_zero());
  CHECK(p.terms().size() < 720);
  CHECK(p.terms().size() <= 15);

  const NoncrossingBasis basis(6);
  const auto monomials = basis.monomials(3);
  const auto a = reduce_to_noncrossing_vars(p).coordinates(monomials);
  const auto b = reduce_to_noncrossing_vars(segre_cubic(6)).coordinates(monomials);
  CHECK(oracle::rank({a, b}) == 1);
  CHECK(oracle::rank({a}) == 1);

  CHECK_ERROR_KIND(odd_power_relation(6, m, 2), ErrorKind::BadExponent);
  CHECK_ERROR_KIND(odd_power_relation(6, m, 5), ErrorKind::BadExponent);
  CHECK_ERROR_KIND(odd_power_relation(6, m, 1), ErrorKind::BadExponent);
  CHECK_ERROR_KIND(odd_power_relation(6, Graph(6, {{1, 2}, {1, 3}, {5, 6}}), 3), ErrorKind::NotAMatching);
}

TEST_CASE("expand variable") {
  const Graph nc(4, {{1, 2}, {3, 4}});
  CHECK(expand_variable(nc) == GraphCombination::of(nc));
  GraphCombination expected(4, {1, 1, 1, 1});
  expected.add(Graph(4, {{1, 2}, {3, 4}}), 1);
  expected.add(Graph(4, {{1, 4}, {2, 3}}), 1);
  CHECK(expand_variable(Graph(4, {{1, 3}, {2, 4}})) == expected);
  CHECK_ERROR_KIND(expand_variable(Graph(4, {{1, 2}, {1, 3}})), ErrorKind::NotAMatching);

  std::mt19937 rng(5);
  for (const auto& m : enumerate_perfect_matchings(8)) {
    const auto e = expand_variable(m.graph());
    for (const auto& [g, c] : e.terms()) CHECK(is_noncrossing(g.graph()));
    const auto pts = oracle::random_points(8, rng);
    Rational total = 0;
    for (const auto& [g, c] : e.terms()) total += c * oracle::eval(testing::pairs(g.graph()), pts);
    CHECK(total == oracle::eval(testing::pairs(m.graph()), pts));
  }
}

TEST_CASE("reduction to non-crossing variables") {
  const NoncrossingBasis basis(6);
  NcPolynomial q;
  q.n = 6;
  q.degree = 2;
  q.add({0, 3}, Rational(5, 2));
  q.add({1, 1}, -1);
  const GraphPolynomial p = q.to_graph_polynomial(basis);
  CHECK(reduce_to_noncrossing_vars(p).terms == q.terms);

  // Random matching polynomials keep their values.
  std::mt19937_64 rng(6);
  std::mt19937 pts_rng(7);
  const auto all = enumerate_perfect_matchings(6);
  for (int t = 0; t < 20; ++t) {
    GraphPolynomial r(6);
    for (int k = 0; k < 3; ++k) {
      r.add({all[rng() % all.size()].graph(), all[rng() % all.size()].graph()}, static_cast<long>(rng() % 7) - 3);
    }
    const auto red = reduce_to_noncrossing_vars(r).to_graph_polynomial(basis);
    const auto pts = oracle::random_points(6, pts_rng);
    CHECK(poly_at(red, pts) == poly_at(r, pts));
  }
}

TEST_CASE("ring normal form") {
  CHECK(ring_normal_form(GraphPolynomial(6)).is_zero());
  GraphPolynomial p(4);
  p.add({Graph(4, {{1, 3}, {2, 4}}), Graph(4, {{1, 2}, {3, 4}})}, 1);
  CHECK_FALSE(ring_normal_form(p).is_zero());
}

TEST_CASE("ideal membership") {
  Straightener s;
  const auto gens8 = simple_binomial_relations(8);
  const auto s8 = segre_cubic(8);
  const auto r8 = ideal_membership(s8, gens8, 3, s);
  CHECK(r8.member);
  CHECK(r8.rows == 560);
  CHECK(r8.columns == 35 * 14);
  CHECK(verify_certificate(s8, gens8, r8, s));
  // A tampered certificate no longer verifies.
  auto broken = r8;
  broken.certificate.front().coeff += 1;
  CHECK_FALSE(verify_certificate(s8, gens8, broken, s));

  CHECK_FALSE(ideal_membership(segre_cubic(6), simple_binomial_relations(6), 3, s).member);

  const auto zero = ideal_membership(GraphPolynomial(8), gens8, 3, s);
  CHECK(zero.member);
  CHECK(zero.certificate.empty());

  // A generator times a variable is a member of degree 3.
  GraphPolynomial product(8);
  for (const auto& [m, c] : gens8[4].terms()) {
    std::vector<Graph> factors;
    for (const auto& f : m) factors.push_back(f.graph());
    factors.push_back(Graph(8, {{1, 5}, {2, 6}, {3, 7}, {4, 8}}));
    product.add(factors, c);
  }
  CHECK(ideal_membership(product, gens8, 3, s).member);

  CHECK_ERROR_KIND(ideal_membership(s8, gens8, 2, s), ErrorKind::DegreeMismatch);
}

TEST_CASE("clump images of binomial generators are binomial relations or zero") {
  Straightener s;
  std::mt19937 rng(8);
  const std::vector<std::vector<std::vector<int>>> clumpings = {
      {{1, 2}, {3}, {4}, {5}, {6}, {7}, {8}},
      {{1, 2}, {3, 4}, {5}, {6}, {7}, {8}},
      {{1}, {2, 3}, {4}, {5, 6}, {7}, {8}},
  };
  for (const auto& clumps : clumpings) {
    std::size_t nonzero = 0;
    for (const auto& g : simple_binomial_relations(8)) {
      const auto image = clump_map(g, clumps);
      if (image.is_zero()) continue;
      ++nonzero;
      CHECK(image.terms().size() == 2);
      CHECK(ring_normal_form(image, s).is_zero());
      CHECK(vanishes(image, rng, 3));
    }
    CHECK(nonzero > 0);
  }
}
