#pragma once

#include <cstdint>
#include <random>

#include "p1inv/combination.hpp"
#include "p1inv/graph.hpp"

namespace p1inv {

/// Random loopless multigraph with `edges` edges on 1..n, random orientations.
Graph random_graph(int n, int edges, std::mt19937_64& rng);

/// Random d-regular loopless multigraph on 1..n, random orientations. n*d
/// must be even and n >= 2.
Graph random_regular_graph(int n, int d, std::mt19937_64& rng);

/// Random combination of up to `terms` graphs sharing the multidegree of a
/// random seed graph (obtained by degree-preserving edge swaps), with small
/// random rational coefficients.
GraphCombination random_combination(int n, int edges, int terms, std::mt19937_64& rng);

}  // namespace p1inv
