#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "p1inv/graph.hpp"
#include "p1inv/rational.hpp"

namespace p1inv {

/// Picks a loopless multigraph with the given multidegree (weights sorted
/// descending, total even, max <= total/2). Edges use 1-based positions in
/// the sorted vector.
using GammaChooser = std::function<std::vector<Edge>(const std::vector<int>& weights)>;

/// Repeatedly joins the two positions of largest remaining degree (lowest
/// position on ties).
std::vector<Edge> greedy_gamma(const std::vector<int>& weights);

/// Random feasible choice: each step joins a uniformly drawn pair whose
/// removal keeps the remaining degrees realizable.
GammaChooser random_gamma(std::uint64_t seed);

struct DegreeTrace {
  enum class Rule { Point, Veronese, Reduce, Split };

  struct Branch {
    int j = 0;  ///< 1-based positions in `weights`
    int k = 0;
    int multiplicity = 1;
    bool contributes = true;  ///< false when w_j + w_k = total/2
    std::shared_ptr<const DegreeTrace> child;
  };

  std::vector<int> weights;  ///< sorted descending
  Rule rule = Rule::Point;
  Integer value;
  std::vector<Edge> gamma;  ///< Split only
  std::vector<Branch> branches;
};

std::string to_string(DegreeTrace::Rule r);

class DegreeCalculator {
 public:
  explicit DegreeCalculator(GammaChooser chooser = greedy_gamma, bool memoize = true);

  /// Throws OddTotalWeight, EmptyModuli, DegenerateModuli.
  Integer degree(const WeightVector& w);
  DegreeTrace trace(const WeightVector& w);

  std::size_t memo_size() const noexcept { return memo_.size(); }

 private:
  Integer compute(const std::vector<int>& sorted);
  std::shared_ptr<const DegreeTrace> build_trace(const std::vector<int>& sorted);

  GammaChooser chooser_;
  bool memoize_;
  std::map<std::vector<int>, Integer> memo_;
};

Integer moduli_degree(const WeightVector& w);

/// True when some weight is exactly half the total, so that no configuration
/// is stable and the degree is reported as a boundary value.
bool is_boundary(const WeightVector& w);

}  // namespace p1inv
