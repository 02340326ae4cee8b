#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "p1inv/combination.hpp"
#include "p1inv/graph.hpp"

namespace p1inv {

/// Three-term exchange on edges e1 = a->b and e2 = c->d of g (four distinct
/// endpoints): X_g = X_{g - e1 - e2 + a->c + b->d} + X_{g - e1 - e2 + a->d + c->b}.
/// Throws SharedEndpoint.
GraphCombination plucker_exchange(const Graph& g, std::size_t e1, std::size_t e2);

/// Rewrites combinations onto non-crossing graphs. Always exchanges the first
/// crossing pair (by edge index) of the canonical graph; per-graph results are
/// memoized by canonical key. Not thread-safe: use one instance per thread.
class Straightener {
 public:
  explicit Straightener(bool memoize = true) : memoize_(memoize) {}

  GraphCombination straighten(const CanonicalGraph& g);
  GraphCombination straighten(const GraphCombination& c);

  std::size_t cache_size() const noexcept { return cache_.size(); }
  std::size_t exchanges() const noexcept { return exchanges_; }

 private:
  const GraphCombination& straighten_cached(const CanonicalGraph& g);
  GraphCombination straighten_uncached(const CanonicalGraph& g);

  bool memoize_;
  std::size_t exchanges_ = 0;
  std::unordered_map<CanonicalGraph, GraphCombination, CanonicalGraphHash> cache_;
};

GraphCombination straighten(const GraphCombination& c);

/// Sum over edges of sin(pi * arc / n): total chord length of the drawing on
/// a regular n-gon inscribed in a circle of diameter 1.
double chord_length(const Graph& g);

/// Clumps are given as consecutive vertex intervals covering 1..n in order,
/// e.g. {{1,2},{3},{4}}. Throws NonContiguousClump.
void validate_clumps(int n, const std::vector<std::vector<int>>& clumps);

/// Image of g under identification of each clump to one vertex; nullopt when
/// an edge collapses into a loop (the image invariant is zero).
std::optional<Graph> clump_graph(const Graph& g, const std::vector<std::vector<int>>& clumps);

GraphCombination clump_map(const GraphCombination& c, const std::vector<std::vector<int>>& clumps);

/// Non-crossing perfect matchings G of 1..n whose clump image is +-h.
std::vector<CanonicalGraph> noncrossing_lifts(const CanonicalGraph& h, int n,
                                              const std::vector<std::vector<int>>& clumps);

}  // namespace p1inv
