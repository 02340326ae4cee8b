#include "p1inv/kempe.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "p1inv/error.hpp"
#include "p1inv/straightening.hpp"

namespace p1inv {

Bipartition::Bipartition(int n, std::vector<int> positives)
    : n_(n), positive_(static_cast<std::size_t>(n) + 1, false) {
  if (n % 2 != 0 || static_cast<int>(positives.size()) * 2 != n) {
    throw Error(ErrorKind::VertexOutOfRange, "bipartition halves must have equal size");
  }
  for (int v : positives) {
    if (v < 1 || v > n || positive_[v]) {
      throw Error(ErrorKind::VertexOutOfRange, "bad positive vertex " + std::to_string(v));
    }
    positive_[v] = true;
  }
}

Bipartition Bipartition::halves(int n) {
  std::vector<int> pos(static_cast<std::size_t>(n / 2));
  std::iota(pos.begin(), pos.end(), 1);
  return Bipartition(n, std::move(pos));
}

std::vector<int> Bipartition::positives() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (positive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<int> Bipartition::negatives() const {
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v) {
    if (!positive_[v]) out.push_back(v);
  }
  return out;
}

namespace {

int regular_degree(const Graph& g) {
  const auto deg = multidegree(g);
  if (deg.empty()) return 0;
  for (int d : deg) {
    if (d != deg.front()) return -1;
  }
  return deg.front();
}

enum class EdgeKind { Positive, Negative, Neutral };

EdgeKind kind_of(const Edge& e, const Bipartition& b) {
  const bool t = b.is_positive(e.tail);
  const bool h = b.is_positive(e.head);
  if (t && h) return EdgeKind::Positive;
  if (!t && !h) return EdgeKind::Negative;
  return EdgeKind::Neutral;
}

class BipartiteMatcher {
 public:
  BipartiteMatcher(const Graph& g, const Bipartition& b)
      : g_(g),
        bipartition_(&b),
        adjacency_(static_cast<std::size_t>(g.n()) + 1),
        mate_edge_(static_cast<std::size_t>(g.n()) + 1, -1),
        positive_edge_(static_cast<std::size_t>(g.n()) + 1, -1) {
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const Edge& e = g.edges()[i];
      const int p = b.is_positive(e.tail) ? e.tail : e.head;
      adjacency_[p].push_back(i);
    }
    for (auto& adj : adjacency_) {
      std::stable_sort(adj.begin(), adj.end(), [&](std::size_t x, std::size_t y) {
        return other_end(x, b) < other_end(y, b);
      });
    }
  }

  std::vector<std::size_t> run() {
    const int n = g_.n();
    for (int p = 1; p <= n; ++p) {
      if (!bipartition_->is_positive(p)) continue;
      bool done = false;
      for (std::size_t e : adjacency_[p]) {
        const int q = other_end(e, *bipartition_);
        if (mate_edge_[q] < 0) {
          mate_edge_[q] = static_cast<int>(e);
          positive_edge_[p] = static_cast<int>(e);
          done = true;
          break;
        }
      }
      if (done) continue;
      std::vector<bool> visited(static_cast<std::size_t>(n) + 1, false);
      if (!augment(p, visited)) {
        throw Error(ErrorKind::NotNeutralRegular, "no perfect matching exists");
      }
    }
    std::vector<std::size_t> chosen;
    for (int p = 1; p <= n; ++p) {
      if (positive_edge_[p] >= 0) chosen.push_back(static_cast<std::size_t>(positive_edge_[p]));
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }

 private:
  int other_end(std::size_t e, const Bipartition& b) const {
    const Edge& edge = g_.edges()[e];
    return b.is_positive(edge.tail) ? edge.head : edge.tail;
  }

  bool augment(int p, std::vector<bool>& visited) {
    for (std::size_t e : adjacency_[p]) {
      const int q = other_end(e, *bipartition_);
      if (visited[q]) continue;
      visited[q] = true;
      const int current = mate_edge_[q];
      if (current < 0) {
        mate_edge_[q] = static_cast<int>(e);
        positive_edge_[p] = static_cast<int>(e);
        return true;
      }
      const Edge& held = g_.edges()[static_cast<std::size_t>(current)];
      const int holder = bipartition_->is_positive(held.tail) ? held.tail : held.head;
      if (augment(holder, visited)) {
        mate_edge_[q] = static_cast<int>(e);
        positive_edge_[p] = static_cast<int>(e);
        return true;
      }
    }
    return false;
  }

  const Graph& g_;
  const Bipartition* bipartition_ = nullptr;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<int> mate_edge_;      // negative vertex -> edge index
  std::vector<int> positive_edge_;  // positive vertex -> edge index
};

Graph remove_edges(const Graph& g, const std::vector<std::size_t>& sorted_indices) {
  std::vector<Edge> rest;
  std::size_t k = 0;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (k < sorted_indices.size() && sorted_indices[k] == i) {
      ++k;
      continue;
    }
    rest.push_back(g.edges()[i]);
  }
  return Graph(g.n(), std::move(rest));
}

Graph select_edges(const Graph& g, const std::vector<std::size_t>& indices) {
  std::vector<Edge> picked;
  picked.reserve(indices.size());
  for (std::size_t i : indices) picked.push_back(g.edges()[i]);
  return Graph(g.n(), std::move(picked));
}

std::vector<Graph> peel_matchings(Graph g, const Bipartition& b) {
  std::vector<Graph> factors;
  while (!g.edges().empty()) {
    BipartiteMatcher matcher(g, b);
    const auto chosen = matcher.run();
    factors.push_back(select_edges(g, chosen));
    g = remove_edges(g, chosen);
  }
  return factors;
}

void require_neutral_regular(const Graph& g, const Bipartition& b) {
  if (g.n() != b.n()) throw Error(ErrorKind::NotNeutralRegular, "bipartition size differs from graph");
  const int d = regular_degree(g);
  if (d < 1) throw Error(ErrorKind::NotNeutralRegular, "graph is not d-regular with d >= 1");
  for (const Edge& e : g.edges()) {
    if (kind_of(e, b) != EdgeKind::Neutral) {
      throw Error(ErrorKind::NotNeutralRegular,
                  "edge " + std::to_string(e.tail) + "-" + std::to_string(e.head) + " is not neutral");
    }
  }
}

}  // namespace

Graph hall_matching(const Graph& g, const Bipartition& b) {
  require_neutral_regular(g, b);
  BipartiteMatcher matcher(g, b);
  return select_edges(g, matcher.run());
}

GraphCombination neutralize(const Graph& g, const Bipartition& b) {
  if (g.n() != b.n()) throw Error(ErrorKind::NotRegular, "bipartition size differs from graph");
  if (regular_degree(g) < 0) throw Error(ErrorKind::NotRegular, "graph is not regular");
  GraphCombination done(g.n(), multidegree(g));
  std::map<CanonicalGraph, Rational> pending;
  {
    auto c = canonicalize(g);
    pending.emplace(c.graph, Rational(c.sign));
  }
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const CanonicalGraph& h = node.key();
    const Rational& coeff = node.mapped();
    std::size_t pos = h.edges().size();
    std::size_t neg = h.edges().size();
    for (std::size_t i = 0; i < h.edges().size(); ++i) {
      const EdgeKind k = kind_of(h.edges()[i], b);
      if (k == EdgeKind::Positive && pos == h.edges().size()) pos = i;
      if (k == EdgeKind::Negative && neg == h.edges().size()) neg = i;
    }
    if (pos == h.edges().size()) {
      done.add(h, coeff);
      continue;
    }
    // Regularity forces equally many positive and negative edges.
    const GraphCombination step = plucker_exchange(h.graph(), pos, neg);
    for (const auto& [next, c] : step.terms()) {
      Rational value = c * coeff;
      auto [it, inserted] = pending.try_emplace(next, value);
      if (!inserted) {
        it->second += value;
        if (it->second == 0) pending.erase(it);
      }
    }
  }
  return done;
}

std::vector<MatchingProduct> kempe_decompose(const Graph& g) {
  if (g.n() % 2 != 0) throw Error(ErrorKind::OddVertexCount, std::to_string(g.n()));
  if (regular_degree(g) < 0) throw Error(ErrorKind::NotRegular, "graph is not regular");
  const Bipartition b = Bipartition::halves(g.n());
  std::vector<MatchingProduct> out;
  const bool already_neutral = std::all_of(g.edges().begin(), g.edges().end(),
                                           [&](const Edge& e) { return kind_of(e, b) == EdgeKind::Neutral; });
  if (regular_degree(g) == 1) {
    out.push_back({Rational(1), {g}});
    return out;
  }
  if (already_neutral) {
    out.push_back({Rational(1), peel_matchings(g, b)});
    return out;
  }
  const GraphCombination neutral = neutralize(g, b);
  for (const auto& [h, coeff] : neutral.terms()) {
    out.push_back({coeff, peel_matchings(h.graph(), b)});
  }
  return out;
}

GraphCombination expand(const std::vector<MatchingProduct>& products, int n) {
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  bool have_degree = false;
  GraphCombination out(n, degree);
  for (const auto& p : products) {
    Graph product(n, {});
    for (const auto& f : p.factors) product = multiply(product, f);
    if (!have_degree) {
      out = GraphCombination(n, multidegree(product));
      have_degree = true;
    }
    out.add(product, p.coeff);
  }
  return out;
}

LiftedGraph lift_graph(const Graph& g, const WeightVector& w) {
  if (static_cast<std::size_t>(g.n()) != w.size()) {
    throw Error(ErrorKind::LengthMismatch, "graph and weight vector sizes differ");
  }
  const auto deg = multidegree(g);
  int d = -1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (deg[i] % w[i] != 0 || (d >= 0 && deg[i] / w[i] != d)) {
      throw Error(ErrorKind::NotMultipleOfWeight, "multidegree is not d*w");
    }
    d = deg[i] / w[i];
  }
  std::vector<int> offset(w.size() + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) offset[i + 1] = offset[i] + w[i];
  std::vector<int> dealt(w.size(), 0);
  auto copy_of = [&](int v) {
    const std::size_t i = static_cast<std::size_t>(v - 1);
    const int copy = offset[i] + (dealt[i] % w[i]) + 1;
    ++dealt[i];
    return copy;
  };
  std::vector<Edge> lifted;
  lifted.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    const int t = copy_of(e.tail);
    const int h = copy_of(e.head);
    lifted.push_back({t, h});
  }
  std::vector<int> vertex_map(static_cast<std::size_t>(w.total()));
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (int k = offset[i]; k < offset[i + 1]; ++k) vertex_map[k] = static_cast<int>(i) + 1;
  }
  return {Graph(w.total(), std::move(lifted)), std::move(vertex_map), std::max(d, 0)};
}

std::vector<MatchingProduct> kempe_decompose_weighted(const Graph& g, const WeightVector& w) {
  const LiftedGraph lifted = lift_graph(g, w);
  if (w.total() % 2 != 0) {
    throw Error(ErrorKind::OddVertexCount, "total weight is odd; decompose with 2w instead");
  }
  std::vector<MatchingProduct> out;
  for (const auto& p : kempe_decompose(lifted.graph)) {
    MatchingProduct image{p.coeff, {}};
    bool vanishes = false;
    for (const auto& f : p.factors) {
      std::vector<Edge> down;
      down.reserve(f.edges().size());
      for (const Edge& e : f.edges()) {
        const int t = lifted.vertex_map[e.tail - 1];
        const int h = lifted.vertex_map[e.head - 1];
        // An edge between two copies of one vertex evaluates to zero.
        if (t == h) vanishes = true;
        down.push_back({t, h});
      }
      if (vanishes) break;
      image.factors.emplace_back(g.n(), std::move(down));
    }
    if (!vanishes) out.push_back(std::move(image));
  }
  return out;
}

}  // namespace p1inv
