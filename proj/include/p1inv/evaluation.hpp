#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "p1inv/combination.hpp"
#include "p1inv/graph.hpp"
#include "p1inv/rational.hpp"

namespace p1inv {

/// Homogeneous coordinates [u : v] of a point of the projective line; the
/// affine point p is [p : 1] and infinity is [1 : 0].
struct ProjectivePoint {
  Rational u;
  Rational v;

  static ProjectivePoint affine(const Rational& p) { return {p, Rational(1)}; }
  static ProjectivePoint infinity() { return {Rational(1), Rational(0)}; }
};

bool coincide(const ProjectivePoint& a, const ProjectivePoint& b);

class Configuration {
 public:
  /// Throws InvalidPoint if some point is [0 : 0].
  explicit Configuration(std::vector<ProjectivePoint> points);

  std::size_t size() const noexcept { return points_.size(); }
  /// 1-based, matching graph vertex labels.
  const ProjectivePoint& point(int label) const { return points_[label - 1]; }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }

  /// Parses the shorthand "0,1,1/2,inf".
  static Configuration parse_affine_list(std::string_view text);

  /// Applies p -> (a p + b) / (c p + d) to every point.
  Configuration transformed(const Rational& a, const Rational& b, const Rational& c,
                            const Rational& d) const;

 private:
  std::vector<ProjectivePoint> points_;
};

enum class Stability { Stable, StrictlySemistable, Unstable };

std::string_view to_string(Stability s);

/// Throws LengthMismatch.
Stability stability(const Configuration& c, const WeightVector& w);

/// Product over edges of u_head v_tail - u_tail v_head. Throws LengthMismatch.
Rational evaluate(const Graph& g, const Configuration& c);
Rational evaluate_combination(const GraphCombination& comb, const Configuration& c);

/// All bracket values [a, b] = u_b v_a - u_a v_b of one configuration, for
/// evaluating many graphs at the same points.
class BracketTable {
 public:
  explicit BracketTable(const Configuration& c);

  int n() const noexcept { return n_; }
  const Rational& bracket(int tail, int head) const { return table_[(tail - 1) * n_ + (head - 1)]; }
  Rational evaluate(const Graph& g) const;
  Rational evaluate(const GraphCombination& comb) const;

 private:
  int n_;
  std::vector<Rational> table_;
};

/// Deterministic in the seed; distinct affine integer points in [-10^4, 10^4].
/// Throws NoStableConfiguration when some weight is at least half the total.
Configuration random_stable_configuration(const WeightVector& w, std::uint64_t seed);

}  // namespace p1inv
