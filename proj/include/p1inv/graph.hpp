#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace p1inv {

/// Positive integer weights w_1..w_n attached to labeled points.
class WeightVector {
 public:
  explicit WeightVector(std::vector<int> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  int total() const noexcept { return total_; }
  /// 0-based access; the point labeled i is at index i - 1.
  int operator[](std::size_t index) const { return weights_[index]; }
  std::span<const int> values() const noexcept { return weights_; }

  bool operator==(const WeightVector&) const = default;

 private:
  std::vector<int> weights_;
  int total_ = 0;
};

/// Directed edge tail -> head between 1-based vertex labels.
struct Edge {
  int tail = 0;
  int head = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Directed loopless multigraph on vertices 1..n. Edge order is kept as given;
/// equality compares edge multisets.
class Graph {
 public:
  Graph() = default;
  /// Throws LoopEdge or VertexOutOfRange.
  Graph(int n, std::vector<Edge> edges);

  int n() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

struct Canonicalized;

/// A graph whose edges all satisfy tail < head, sorted lexicographically.
/// Usable as a map key; ordering is by n and then the edge list.
class CanonicalGraph {
 public:
  CanonicalGraph() = default;

  const Graph& graph() const noexcept { return graph_; }
  int n() const noexcept { return graph_.n(); }
  const std::vector<Edge>& edges() const noexcept { return graph_.edges(); }

  /// Wraps edges that are already canonical; throws VertexOutOfRange if not.
  static CanonicalGraph from_sorted(int n, std::vector<Edge> edges);

  std::strong_ordering operator<=>(const CanonicalGraph& other) const;
  bool operator==(const CanonicalGraph& other) const;

 private:
  friend Canonicalized canonicalize(const Graph& g);
  explicit CanonicalGraph(Graph g) : graph_(std::move(g)) {}
  Graph graph_;
};

struct Canonicalized {
  CanonicalGraph graph;
  int sign = 1;  ///< (-1)^(number of reversed edges)
};

Canonicalized canonicalize(const Graph& g);

std::vector<int> multidegree(const Graph& g);
inline std::vector<int> multidegree(const CanonicalGraph& g) { return multidegree(g.graph()); }

/// Edge multiset union. Throws VertexCountMismatch.
Graph multiply(const Graph& g, const Graph& h);
CanonicalGraph multiply(const CanonicalGraph& g, const CanonicalGraph& h);

/// True iff edges {a,b} and {c,d} (with the vertices on a regular n-gon)
/// cross. Edges sharing an endpoint never cross.
bool edges_cross(const Edge& e, const Edge& f);

/// Index pairs (i < j) of crossing edges, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const Graph& g);
bool is_noncrossing(const Graph& g);

/// Every non-crossing canonical graph of the given multidegree, sorted.
/// Throws OddDegreeSum.
std::vector<CanonicalGraph> enumerate_noncrossing(int n, std::span<const int> degree);

/// Every perfect matching of 1..n (n even), canonical and sorted.
std::vector<CanonicalGraph> enumerate_perfect_matchings(int n);

bool is_perfect_matching(const Graph& g);

/// Lowest degree of an invariant: 1 if the total weight is even, else 2.
int epsilon(const WeightVector& w);

/// Text form "1-2 3-4" (arrow form "1>2" for non-canonical orientation).
std::string to_string(const Graph& g);

struct CanonicalGraphHash {
  std::size_t operator()(const CanonicalGraph& g) const noexcept;
};

}  // namespace p1inv
