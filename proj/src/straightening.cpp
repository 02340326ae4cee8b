#include "p1inv/straightening.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

#include "p1inv/error.hpp"

namespace p1inv {

GraphCombination plucker_exchange(const Graph& g, std::size_t e1, std::size_t e2) {
  const auto& edges = g.edges();
  if (e1 >= edges.size() || e2 >= edges.size() || e1 == e2) {
    throw Error(ErrorKind::DimensionMismatch, "edge indices out of range or equal");
  }
  const Edge f = edges[e1];
  const Edge h = edges[e2];
  if (f.tail == h.tail || f.tail == h.head || f.head == h.tail || f.head == h.head) {
    throw Error(ErrorKind::SharedEndpoint, "edges " + std::to_string(e1) + " and " +
                                               std::to_string(e2) + " share a vertex");
  }
  std::vector<Edge> residual;
  residual.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i != e1 && i != e2) residual.push_back(edges[i]);
  }
  // [a,b][c,d] = [a,c][b,d] + [a,d][c,b]
  auto first = residual;
  first.push_back({f.tail, h.tail});
  first.push_back({f.head, h.head});
  auto second = std::move(residual);
  second.push_back({f.tail, h.head});
  second.push_back({h.tail, f.head});

  GraphCombination out(g.n(), multidegree(g));
  out.add(Graph(g.n(), std::move(first)), 1);
  out.add(Graph(g.n(), std::move(second)), 1);
  return out;
}

double chord_length(const Graph& g) {
  double total = 0.0;
  const int n = g.n();
  for (const Edge& e : g.edges()) {
    const int gap = std::abs(e.head - e.tail);
    const int arc = std::min(gap, n - gap);
    total += std::sin(std::numbers::pi * arc / n);
  }
  return total;
}

GraphCombination Straightener::straighten(const CanonicalGraph& g) {
  if (memoize_) return straighten_cached(g);
  return straighten_uncached(g);
}

GraphCombination Straightener::straighten(const GraphCombination& c) {
  GraphCombination out(c.n(), c.degree());
  for (const auto& [g, coeff] : c.terms()) {
    if (memoize_) {
      out.add(straighten_cached(g), coeff);
    } else {
      out.add(straighten_uncached(g), coeff);
    }
  }
  return out;
}

const GraphCombination& Straightener::straighten_cached(const CanonicalGraph& g) {
  if (auto it = cache_.find(g); it != cache_.end()) return it->second;
  const auto crossings = crossing_pairs(g.graph());
  GraphCombination result(g.n(), multidegree(g));
  if (crossings.empty()) {
    result.add(g, 1);
  } else {
    ++exchanges_;
    const auto [i, j] = crossings.front();
    const GraphCombination step = plucker_exchange(g.graph(), i, j);
#ifndef NDEBUG
    const double before = chord_length(g.graph());
    for (const auto& [h, c] : step.terms()) assert(chord_length(h.graph()) < before - 1e-9);
#endif
    for (const auto& [h, c] : step.terms()) result.add(straighten_cached(h), c);
  }
  return cache_.emplace(g, std::move(result)).first->second;
}

GraphCombination Straightener::straighten_uncached(const CanonicalGraph& g) {
  const auto crossings = crossing_pairs(g.graph());
  GraphCombination result(g.n(), multidegree(g));
  if (crossings.empty()) {
    result.add(g, 1);
    return result;
  }
  ++exchanges_;
  const auto [i, j] = crossings.front();
  const GraphCombination step = plucker_exchange(g.graph(), i, j);
  for (const auto& [h, c] : step.terms()) result.add(straighten_uncached(h), c);
  return result;
}

GraphCombination straighten(const GraphCombination& c) {
  Straightener s;
  return s.straighten(c);
}

void validate_clumps(int n, const std::vector<std::vector<int>>& clumps) {
  int next = 1;
  for (const auto& clump : clumps) {
    if (clump.empty()) throw Error(ErrorKind::NonContiguousClump, "empty clump");
    for (int v : clump) {
      if (v != next) {
        throw Error(ErrorKind::NonContiguousClump,
                    "expected vertex " + std::to_string(next) + ", found " + std::to_string(v));
      }
      ++next;
    }
  }
  if (next != n + 1) {
    throw Error(ErrorKind::NonContiguousClump, "clumps do not cover 1.." + std::to_string(n));
  }
}

namespace {

std::vector<int> clump_index(int n, const std::vector<std::vector<int>>& clumps) {
  validate_clumps(n, clumps);
  std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t k = 0; k < clumps.size(); ++k) {
    for (int v : clumps[k]) image[v] = static_cast<int>(k) + 1;
  }
  return image;
}

std::optional<Graph> clump_graph_with(const Graph& g, const std::vector<int>& image, int target_n) {
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    const int t = image[e.tail];
    const int h = image[e.head];
    if (t == h) return std::nullopt;
    edges.push_back({t, h});
  }
  return Graph(target_n, std::move(edges));
}

}  // namespace

std::optional<Graph> clump_graph(const Graph& g, const std::vector<std::vector<int>>& clumps) {
  const auto image = clump_index(g.n(), clumps);
  return clump_graph_with(g, image, static_cast<int>(clumps.size()));
}

GraphCombination clump_map(const GraphCombination& c, const std::vector<std::vector<int>>& clumps) {
  const auto image = clump_index(c.n(), clumps);
  const int target_n = static_cast<int>(clumps.size());
  std::vector<int> degree(static_cast<std::size_t>(target_n), 0);
  for (int v = 1; v <= c.n(); ++v) degree[image[v] - 1] += c.degree()[v - 1];
  GraphCombination out(target_n, std::move(degree));
  for (const auto& [g, coeff] : c.terms()) {
    if (auto h = clump_graph_with(g.graph(), image, target_n)) out.add(*h, coeff);
  }
  return out;
}

std::vector<CanonicalGraph> noncrossing_lifts(const CanonicalGraph& h, int n,
                                              const std::vector<std::vector<int>>& clumps) {
  const auto image = clump_index(n, clumps);
  const std::vector<int> ones(static_cast<std::size_t>(n), 1);
  std::vector<CanonicalGraph> out;
  for (const auto& g : enumerate_noncrossing(n, ones)) {
    auto mapped = clump_graph_with(g.graph(), image, static_cast<int>(clumps.size()));
    if (mapped && canonicalize(*mapped).graph == h) out.push_back(g);
  }
  return out;
}

}  // namespace p1inv
