#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "p1inv/evaluation.hpp"
#include "p1inv/graph.hpp"
#include "p1inv/linalg.hpp"

namespace p1inv {

/// Affine coordinates around the strictly semistable point (0^m, inf^m).
/// Row r is i = r + 2 (i = 2..m); column c is j = m + 1 + c (j = m+1..2m-1).
struct ChartPoint {
  int m = 0;
  RationalMatrix W;
  RationalMatrix Z;
};

/// Matchings G of {1..2m} minus {1, i, j, 2m} for which 1-j, i-2m, G only joins
/// the two halves: bijections from {2..m} - {i} to {m+1..2m-1} - {j}, edges
/// oriented first half to second half. The first is the increasing pairing.
std::vector<std::vector<Edge>> good_completions(int m, int i, int j);

/// The graphs in the two ratios for entry (i, j) and completion G.
Graph w_numerator(int m, int i, int j, const std::vector<Edge>& gamma);    // 1-i, j-2m, G
Graph w_denominator(int m, int i, int j, const std::vector<Edge>& gamma);  // 1-j, i-2m, G
Graph z_denominator(int m, int i, int j, const std::vector<Edge>& gamma);  // 1-2m, j-i, G

/// No point of the first half coincides with a point of the second half.
bool in_chart(const Configuration& c);

/// Throws OddVertexCount, VertexCountTooSmall, NotInChart.
ChartPoint chart_coordinates(const Configuration& c);

/// W entry computed with a specific completion. Throws NotInChart.
Rational chart_w(const Configuration& c, int i, int j, const std::vector<Edge>& gamma);

struct ChartReport {
  bool rank_one = true;
  bool z_identity = true;
  std::size_t minors_checked = 0;
  std::size_t entries_checked = 0;
  /// (i, j) pairs where Z has a zero denominator and the identity is skipped.
  std::vector<std::pair<int, int>> skipped;

  bool ok() const noexcept { return rank_one && z_identity; }
};

/// Checks every 2x2 minor of W and Z_ij (W_ij - 1) = 1. Throws NotInChart.
ChartReport verify_chart(const Configuration& c);
ChartReport verify_chart(const ChartPoint& p);

/// Recomputes every W entry with up to `alternatives` good completions and
/// reports whether all agree. Throws NotInChart.
bool completion_independent(const Configuration& c, std::size_t alternatives);

}  // namespace p1inv
