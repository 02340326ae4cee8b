#pragma once

#include <vector>

#include "p1inv/combination.hpp"
#include "p1inv/graph.hpp"
#include "p1inv/rational.hpp"

namespace p1inv {

/// Split of 1..n into equal "positive" and "negative" halves.
class Bipartition {
 public:
  /// Throws VertexOutOfRange unless positives and negatives partition 1..n
  /// into halves of equal size.
  Bipartition(int n, std::vector<int> positives);

  /// {1..n/2} | {n/2+1..n}
  static Bipartition halves(int n);

  int n() const noexcept { return n_; }
  bool is_positive(int v) const { return positive_[v]; }
  std::vector<int> positives() const;
  std::vector<int> negatives() const;

 private:
  int n_;
  std::vector<bool> positive_;  // indexed by label, slot 0 unused
};

/// A perfect matching contained in g (by edge multiset, orientation kept).
/// Requires g to be d-regular with d >= 1 and every edge neutral; throws
/// NotNeutralRegular otherwise. Positive vertices are matched in increasing
/// order, each taking its first free neighbour before augmenting paths are
/// tried.
Graph hall_matching(const Graph& g, const Bipartition& b);

/// Rewrites X_g as a combination of graphs with only neutral edges by
/// exchanging the smallest positive edge against the smallest negative edge
/// until none remain. Throws NotRegular.
GraphCombination neutralize(const Graph& g, const Bipartition& b);

struct MatchingProduct {
  Rational coeff;
  std::vector<Graph> factors;
};

/// X_g = sum coeff * prod X_factor with every factor a perfect matching.
/// Uses the bipartition {1..n/2} | {n/2+1..n}. Throws NotRegular,
/// OddVertexCount.
std::vector<MatchingProduct> kempe_decompose(const Graph& g);

/// Multiplies out a decomposition into a single combination (for checks).
GraphCombination expand(const std::vector<MatchingProduct>& products, int n);

struct LiftedGraph {
  Graph graph;                  ///< d-regular on |w| vertices
  std::vector<int> vertex_map;  ///< vertex_map[v - 1] = image of lifted vertex v
  int d = 0;
};

/// Splits vertex i into w_i consecutive copies and deals the edge ends at i
/// to the copies round-robin in edge order. Throws NotMultipleOfWeight,
/// LengthMismatch.
LiftedGraph lift_graph(const Graph& g, const WeightVector& w);

/// Decomposition for a general weight vector: lift, decompose, push each
/// matching factor back down. Factors have multidegree w. Throws
/// OddVertexCount when |w| is odd (use 2w).
std::vector<MatchingProduct> kempe_decompose_weighted(const Graph& g, const WeightVector& w);

}  // namespace p1inv
