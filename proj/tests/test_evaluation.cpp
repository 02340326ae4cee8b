#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "p1inv/evaluation.hpp"
#include "p1inv/sampling.hpp"

using namespace p1inv;

TEST_CASE("stability") {
  const WeightVector ones4({1, 1, 1, 1});
  CHECK(stability(Configuration::parse_affine_list("0,1,2,inf"), ones4) == Stability::Stable);
  CHECK(stability(Configuration::parse_affine_list("0,0,1,inf"), ones4) == Stability::StrictlySemistable);
  CHECK(stability(Configuration::parse_affine_list("0,1,2,3"), WeightVector({3, 1, 1, 1})) ==
        Stability::StrictlySemistable);
  CHECK(stability(Configuration::parse_affine_list("0,0,0,1"), ones4) == Stability::Unstable);
  // Coincidence is projective: [2:2] equals [1:1].
  CHECK(stability(Configuration({{2, 2}, {1, 1}, {0, 1}, {1, 0}}), ones4) == Stability::StrictlySemistable);
  CHECK_ERROR_KIND(stability(Configuration::parse_affine_list("0,1,2"), ones4), ErrorKind::LengthMismatch);
  CHECK(to_string(Stability::StrictlySemistable) == "strictlySemistable");
}

TEST_CASE("configuration parsing") {
  const auto c = Configuration::parse_affine_list("0, 1/2, -3, inf");
  REQUIRE(c.size() == 4);
  CHECK(c.point(2).u == Rational(1, 2));
  CHECK(c.point(4).v == 0);
  CHECK_ERROR_KIND(Configuration({{0, 0}}), ErrorKind::InvalidPoint);
  CHECK_ERROR_KIND(Configuration::parse_affine_list("0,x"), ErrorKind::ParseError);
}

TEST_CASE("evaluate") {
  const Graph g(4, {{1, 2}, {3, 4}});
  CHECK(evaluate(g, Configuration::parse_affine_list("0,1,2,3")) == 1);
  CHECK(evaluate(g, Configuration::parse_affine_list("0,1,2,inf")) == 1);
  CHECK(evaluate(Graph(4, {{1, 3}, {2, 4}}), Configuration::parse_affine_list("0,1,2,3")) == 4);
  CHECK(evaluate(Graph(3, {{2, 3}, {1, 2}}), Configuration::parse_affine_list("0,5,5")) == 0);
  CHECK_ERROR_KIND(evaluate(g, Configuration::parse_affine_list("0,1,2")), ErrorKind::LengthMismatch);
}

TEST_CASE("evaluate matches the oracle, and reorienting an edge flips the sign") {
  std::mt19937_64 rng(21);
  std::mt19937 pts_rng(22);
  for (int t = 0; t < 100; ++t) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(n, 1 + static_cast<int>(rng() % 6), rng);
    auto pts = oracle::random_points(n, pts_rng);
    if (t % 3 == 0) pts[rng() % n] = {0, true};
    const auto c = testing::to_config(pts);
    CHECK(evaluate(g, c) == oracle::eval(testing::pairs(g), pts));
    auto edges = g.edges();
    std::swap(edges[0].tail, edges[0].head);
    CHECK(evaluate(Graph(n, edges), c) == -evaluate(g, c));
    CHECK(BracketTable(c).evaluate(g) == evaluate(g, c));
  }
}

TEST_CASE("evaluate_combination") {
  const auto c = Configuration::parse_affine_list("0,1,3,7");
  GraphCombination rel(4, {1, 1, 1, 1});
  rel.add(Graph(4, {{1, 2}, {3, 4}}), 1);
  rel.add(Graph(4, {{1, 3}, {2, 4}}), -1);
  rel.add(Graph(4, {{1, 4}, {2, 3}}), 1);
  CHECK(rel.size() == 3);
  CHECK(evaluate_combination(rel, c) == 0);
  CHECK(evaluate_combination(GraphCombination(4, {1, 1, 1, 1}), c) == 0);
  const Graph g(4, {{4, 1}, {2, 3}});
  CHECK(evaluate_combination(GraphCombination::of(g), c) == evaluate(g, c));
}

TEST_CASE("ratios are invariant under fractional linear maps") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const int n = 4 + 2 * static_cast<int>(rng() % 3);
    const Graph g = random_regular_graph(n, 2, rng);
    const Graph h = random_regular_graph(n, 2, rng);
    const auto c = random_stable_configuration(WeightVector(testing::ones(n)), rng());
    Rational a, b, cc, d;
    do {
      a = static_cast<long>(rng() % 11) - 5;
      b = static_cast<long>(rng() % 11) - 5;
      cc = static_cast<long>(rng() % 11) - 5;
      d = static_cast<long>(rng() % 11) - 5;
    } while (a * d - b * cc == 0);
    const auto moved = c.transformed(a, b, cc, d);
    const Rational before_h = evaluate(h, c);
    if (before_h == 0) continue;
    CHECK(evaluate(g, c) / before_h == evaluate(g, moved) / evaluate(h, moved));
  }
}

TEST_CASE("random stable configurations") {
  const WeightVector w({1, 1, 1, 1, 1, 1});
  const auto a = random_stable_configuration(w, 7);
  CHECK(stability(a, w) == Stability::Stable);
  const auto b = random_stable_configuration(w, 7);
  for (int i = 1; i <= 6; ++i) {
    CHECK(a.point(i).u == b.point(i).u);
    CHECK(a.point(i).v == 1);
    CHECK(abs(a.point(i).u) <= 10000);
  }
  CHECK_ERROR_KIND(random_stable_configuration(WeightVector({3, 1, 1, 1}), 1), ErrorKind::NoStableConfiguration);
}
