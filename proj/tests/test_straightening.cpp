#include <doctest.h>

#include <array>
#include <random>

#include "helpers.hpp"
#include "p1inv/evaluation.hpp"
#include "p1inv/linalg.hpp"
#include "p1inv/sampling.hpp"
#include "p1inv/straightening.hpp"

using namespace p1inv;

namespace {

Rational value_at(const GraphCombination& c, const std::vector<oracle::Pt>& pts) {
  Rational total = 0;
  for (const auto& [g, coeff] : c.terms()) total += coeff * oracle::eval(testing::pairs(g.graph()), pts);
  return total;
}

}  // namespace

TEST_CASE("plucker exchange on the crossing square") {
  const auto r = plucker_exchange(Graph(4, {{1, 3}, {2, 4}}), 0, 1);
  GraphCombination expected(4, {1, 1, 1, 1});
  expected.add(Graph(4, {{1, 2}, {3, 4}}), 1);
  expected.add(Graph(4, {{1, 4}, {2, 3}}), 1);
  CHECK(r == expected);
  for (const auto& xs : {std::vector<long>{0, 1, 2, 3}, std::vector<long>{0, 1, 3, 7}}) {
    const auto pts = oracle::affine(xs);
    CHECK(value_at(r, pts) == oracle::eval({{1, 3}, {2, 4}}, pts));
  }
}

TEST_CASE("the exchange signs are the only valid choice") {
  // Among s1 X_{12 34} + s2 X_{14 23} with s1, s2 = +-1, exactly one matches
  // X_{13 24} at two configurations, and it is the one implemented.
  const std::array<std::vector<long>, 2> configs = {std::vector<long>{0, 1, 2, 3}, std::vector<long>{0, 1, 3, 7}};
  int valid = 0;
  for (int s1 : {1, -1}) {
    for (int s2 : {1, -1}) {
      bool ok = true;
      for (const auto& xs : configs) {
        const auto pts = oracle::affine(xs);
        ok &= s1 * oracle::eval({{1, 2}, {3, 4}}, pts) + s2 * oracle::eval({{1, 4}, {2, 3}}, pts) ==
              oracle::eval({{1, 3}, {2, 4}}, pts);
      }
      if (ok) {
        ++valid;
        const auto r = plucker_exchange(Graph(4, {{1, 3}, {2, 4}}), 0, 1);
        const auto& terms = r.terms();
        CHECK(terms.at(canonicalize(Graph(4, {{1, 2}, {3, 4}})).graph) == s1);
        CHECK(terms.at(canonicalize(Graph(4, {{1, 4}, {2, 3}})).graph) == s2);
      }
    }
  }
  CHECK(valid == 1);
}

TEST_CASE("plucker exchange passes spectator edges through") {
  const auto r = plucker_exchange(Graph(6, {{1, 4}, {2, 5}, {3, 6}}), 0, 1);
  CHECK(r.size() == 2);
  for (const auto& [g, c] : r.terms()) {
    CHECK(std::count(g.edges().begin(), g.edges().end(), Edge{3, 6}) == 1);
  }
  CHECK_ERROR_KIND(plucker_exchange(Graph(4, {{1, 2}, {2, 3}}), 0, 1), ErrorKind::SharedEndpoint);
}

TEST_CASE("plucker exchange is sound on random inputs") {
  std::mt19937_64 rng(31);
  std::mt19937 pts_rng(32);
  int done = 0;
  while (done < 50) {
    const int n = 4 + static_cast<int>(rng() % 5);
    const Graph g = random_graph(n, 2 + static_cast<int>(rng() % 4), rng);
    const auto i = static_cast<std::size_t>(rng() % g.edge_count());
    const auto j = static_cast<std::size_t>(rng() % g.edge_count());
    if (i == j) continue;
    const Edge e = g.edges()[i];
    const Edge f = g.edges()[j];
    if (e.tail == f.tail || e.tail == f.head || e.head == f.tail || e.head == f.head) continue;
    const auto r = plucker_exchange(g, i, j);
    const auto pts = oracle::random_points(n, pts_rng);
    CHECK(value_at(r, pts) == oracle::eval(testing::pairs(g), pts));
    ++done;
  }
}

TEST_CASE("straighten") {
  const auto s = straighten(GraphCombination::of(Graph(4, {{1, 3}, {2, 4}})));
  CHECK(s == plucker_exchange(Graph(4, {{1, 3}, {2, 4}}), 0, 1));

  const Graph nc(6, {{1, 6}, {2, 3}, {4, 5}});
  CHECK(straighten(GraphCombination::of(nc, 3)) == GraphCombination::of(nc, 3));

  GraphCombination rel(4, {1, 1, 1, 1});
  rel.add(Graph(4, {{1, 2}, {3, 4}}), 1);
  rel.add(Graph(4, {{1, 3}, {2, 4}}), -1);
  rel.add(Graph(4, {{1, 4}, {2, 3}}), 1);
  CHECK(straighten(rel).is_zero());
}

TEST_CASE("straightening soundness, support, idempotence, linearity") {
  std::mt19937_64 rng(41);
  std::mt19937 pts_rng(42);
  Straightener memo;
  Straightener plain(false);
  for (int t = 0; t < 200; ++t) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const auto c = random_combination(n, 1 + static_cast<int>(rng() % 8), 3, rng);
    const auto s = memo.straighten(c);
    for (const auto& [g, coeff] : s.terms()) CHECK(is_noncrossing(g.graph()));
    for (int k = 0; k < 3; ++k) {
      const auto pts = oracle::random_points(n, pts_rng);
      CHECK(value_at(s, pts) == value_at(c, pts));
    }
    CHECK(memo.straighten(s) == s);
    CHECK(plain.straighten(c) == s);
    CHECK(memo.straighten(c.scaled(Rational(-3, 2))) == s.scaled(Rational(-3, 2)));
  }
  CHECK(memo.cache_size() > 0);
  CHECK(plain.cache_size() == 0);
}

TEST_CASE("each exchange shortens the total chord length") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 200; ++t) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const auto g = canonicalize(random_graph(n, 2 + static_cast<int>(rng() % 6), rng)).graph;
    const auto crossings = crossing_pairs(g.graph());
    if (crossings.empty()) continue;
    const auto r = plucker_exchange(g.graph(), crossings.front().first, crossings.front().second);
    for (const auto& [h, c] : r.terms()) CHECK(chord_length(h.graph()) < chord_length(g.graph()) - 1e-9);
  }
}

TEST_CASE("non-crossing graphs are linearly independent functions") {
  const std::vector<std::pair<int, std::vector<int>>> cases = {
      {6, testing::ones(6)}, {8, testing::ones(8)}, {6, std::vector<int>(6, 2)}};
  std::mt19937 pts_rng(61);
  for (const auto& [n, d] : cases) {
    const auto graphs = enumerate_noncrossing(n, d);
    bool full = false;
    for (int attempt = 0; attempt <= 3 && !full; ++attempt) {
      std::vector<std::vector<mpq_class>> m;
      for (std::size_t r = 0; r < graphs.size(); ++r) {
        const auto pts = oracle::random_points(n, pts_rng);
        std::vector<mpq_class> row;
        for (const auto& g : graphs) row.push_back(oracle::eval(testing::pairs(g.graph()), pts));
        m.push_back(std::move(row));
      }
      full = oracle::rank(m) == graphs.size();
    }
    CHECK(full);
  }
}

TEST_CASE("clump map") {
  const std::vector<std::vector<int>> clumps = {{1, 2}, {3}, {4}};
  const auto a = clump_map(GraphCombination::of(Graph(4, {{1, 3}, {2, 4}})), clumps);
  CHECK(a == GraphCombination::of(Graph(3, {{1, 2}, {1, 3}})));
  CHECK(clump_map(GraphCombination::of(Graph(4, {{1, 2}, {3, 4}})), clumps).is_zero());
  std::mt19937_64 rng(3);
  const auto c = random_combination(5, 4, 3, rng);
  CHECK(clump_map(c, {{1}, {2}, {3}, {4}, {5}}) == c);
  CHECK_ERROR_KIND(validate_clumps(4, {{1, 3}, {2}, {4}}), ErrorKind::NonContiguousClump);
  CHECK_ERROR_KIND(validate_clumps(4, {{1, 2}, {3}}), ErrorKind::NonContiguousClump);
}

TEST_CASE("every non-crossing graph of an adjacent clumping has one non-crossing lift") {
  const std::vector<std::pair<std::vector<int>, std::vector<std::vector<int>>>> cases = {
      {{2, 1, 1, 1, 1}, {{1, 2}, {3}, {4}, {5}, {6}}},
      {{2, 2, 1, 1}, {{1, 2}, {3, 4}, {5}, {6}}},
      {{1, 2, 1, 2}, {{1}, {2, 3}, {4}, {5, 6}}}};
  for (const auto& [w, clumps] : cases) {
    const auto targets = enumerate_noncrossing(static_cast<int>(w.size()), w);
    CHECK(!targets.empty());
    for (const auto& h : targets) CHECK(noncrossing_lifts(h, 6, clumps).size() == 1);
  }
}
