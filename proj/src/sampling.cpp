#include "p1inv/sampling.hpp"

#include <stdexcept>

#include "p1inv/degree.hpp"

namespace p1inv {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Edge oriented(int a, int b, std::mt19937_64& rng) { return uniform(rng, 0, 1) ? Edge{a, b} : Edge{b, a}; }

}  // namespace

Graph random_graph(int n, int edges, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("random_graph needs n >= 2");
  std::vector<Edge> out;
  for (int k = 0; k < edges; ++k) {
    const int a = uniform(rng, 1, n);
    int b = uniform(rng, 1, n - 1);
    if (b >= a) ++b;
    out.push_back(oriented(a, b, rng));
  }
  return Graph(n, std::move(out));
}

Graph random_regular_graph(int n, int d, std::mt19937_64& rng) {
  if (n < 2 || (n * d) % 2 != 0) throw std::invalid_argument("no d-regular multigraph on n vertices");
  const auto skeleton = random_gamma(rng())(std::vector<int>(static_cast<std::size_t>(n), d));
  std::vector<Edge> out;
  for (const Edge& e : skeleton) out.push_back(oriented(e.tail, e.head, rng));
  return Graph(n, std::move(out));
}

GraphCombination random_combination(int n, int edges, int terms, std::mt19937_64& rng) {
  const Graph seed = random_graph(n, edges, rng);
  GraphCombination c(n, multidegree(seed));
  c.add(seed, Rational(uniform(rng, 1, 5) * (uniform(rng, 0, 1) ? 1 : -1)));
  std::vector<Edge> current = seed.edges();
  for (int t = 1; t < terms; ++t) {
    // Swap a-b, c-d into a-c, b-d (or a-d, c-b) when no loop arises.
    for (int attempt = 0; attempt < 8 && current.size() >= 2; ++attempt) {
      const auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(current.size()) - 1));
      const auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(current.size()) - 1));
      if (i == j) continue;
      Edge e = current[i];
      Edge f = current[j];
      const bool cross = uniform(rng, 0, 1);
      const Edge e2 = cross ? Edge{e.tail, f.head} : Edge{e.tail, f.tail};
      const Edge f2 = cross ? Edge{f.tail, e.head} : Edge{e.head, f.head};
      if (e2.tail == e2.head || f2.tail == f2.head) continue;
      current[i] = e2;
      current[j] = f2;
      break;
    }
    Rational coeff(uniform(rng, -5, 5), uniform(rng, 1, 4));
    coeff.canonicalize();
    c.add(Graph(n, current), coeff);
  }
  return c;
}

}  // namespace p1inv
