#pragma once

#include <map>
#include <string>
#include <vector>

#include "p1inv/graph.hpp"
#include "p1inv/rational.hpp"

namespace p1inv {

/// Formal rational combination of canonical graphs sharing one multidegree.
/// Zero coefficients are never stored.
class GraphCombination {
 public:
  using Terms = std::map<CanonicalGraph, Rational>;

  GraphCombination(int n, std::vector<int> degree);

  /// Singleton coeff * X_g; the canonicalization sign is folded in.
  static GraphCombination of(const Graph& g, const Rational& coeff = 1);

  int n() const noexcept { return n_; }
  const std::vector<int>& degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Throws DegreeMismatch if g's multidegree differs.
  void add(const CanonicalGraph& g, const Rational& coeff);
  void add(const Graph& g, const Rational& coeff);
  void add(const GraphCombination& other, const Rational& scale = 1);

  GraphCombination scaled(const Rational& factor) const;

  bool operator==(const GraphCombination& other) const = default;

 private:
  int n_;
  std::vector<int> degree_;
  Terms terms_;
};

/// "3*[1-2 3-4] - [1-4 2-3]" style rendering.
std::string to_string(const GraphCombination& c);

}  // namespace p1inv
