#include "p1inv/chart.hpp"

#include <algorithm>
#include <numeric>

#include "p1inv/error.hpp"

namespace p1inv {

namespace {

int half_of(const Configuration& c) {
  const int n = static_cast<int>(c.size());
  if (n % 2 != 0) throw Error(ErrorKind::OddVertexCount, std::to_string(n));
  if (n < 4) throw Error(ErrorKind::VertexCountTooSmall, "the chart needs at least 4 points");
  return n / 2;
}

Graph with_gamma(int n, std::vector<Edge> edges, const std::vector<Edge>& gamma) {
  edges.insert(edges.end(), gamma.begin(), gamma.end());
  return Graph(n, std::move(edges));
}

void require_in_chart(const Configuration& c) {
  if (in_chart(c)) return;
  const int m = static_cast<int>(c.size()) / 2;
  for (int a = 1; a <= m; ++a) {
    for (int b = m + 1; b <= 2 * m; ++b) {
      if (coincide(c.point(a), c.point(b))) {
        throw Error(ErrorKind::NotInChart,
                    "points " + std::to_string(a) + " and " + std::to_string(b) + " coincide across the halves");
      }
    }
  }
}

}  // namespace

std::vector<std::vector<Edge>> good_completions(int m, int i, int j) {
  std::vector<int> first;
  std::vector<int> second;
  for (int a = 2; a <= m; ++a) {
    if (a != i) first.push_back(a);
  }
  for (int b = m + 1; b < 2 * m; ++b) {
    if (b != j) second.push_back(b);
  }
  std::vector<std::vector<Edge>> out;
  do {
    std::vector<Edge> gamma;
    for (std::size_t t = 0; t < first.size(); ++t) gamma.push_back({first[t], second[t]});
    out.push_back(std::move(gamma));
  } while (std::next_permutation(second.begin(), second.end()));
  return out;
}

Graph w_numerator(int m, int i, int j, const std::vector<Edge>& gamma) {
  return with_gamma(2 * m, {{1, i}, {j, 2 * m}}, gamma);
}

Graph w_denominator(int m, int i, int j, const std::vector<Edge>& gamma) {
  return with_gamma(2 * m, {{1, j}, {i, 2 * m}}, gamma);
}

Graph z_denominator(int m, int i, int j, const std::vector<Edge>& gamma) {
  return with_gamma(2 * m, {{1, 2 * m}, {j, i}}, gamma);
}

bool in_chart(const Configuration& c) {
  const int m = half_of(c);
  for (int a = 1; a <= m; ++a) {
    for (int b = m + 1; b <= 2 * m; ++b) {
      if (coincide(c.point(a), c.point(b))) return false;
    }
  }
  return true;
}

Rational chart_w(const Configuration& c, int i, int j, const std::vector<Edge>& gamma) {
  const int m = half_of(c);
  require_in_chart(c);
  return Rational(evaluate(w_numerator(m, i, j, gamma), c) / evaluate(w_denominator(m, i, j, gamma), c));
}

ChartPoint chart_coordinates(const Configuration& c) {
  const int m = half_of(c);
  require_in_chart(c);
  const BracketTable table(c);
  ChartPoint p{m, RationalMatrix(m - 1, m - 1), RationalMatrix(m - 1, m - 1)};
  for (int i = 2; i <= m; ++i) {
    for (int j = m + 1; j < 2 * m; ++j) {
      const auto gamma = good_completions(m, i, j).front();
      const Rational den = table.evaluate(w_denominator(m, i, j, gamma));
      const Rational zden = table.evaluate(z_denominator(m, i, j, gamma));
      p.W.at(i - 2, j - m - 1) = table.evaluate(w_numerator(m, i, j, gamma)) / den;
      // zden vanishes only if p_i = p_j, which U_P excludes; keep 0 as a marker.
      if (zden != 0) p.Z.at(i - 2, j - m - 1) = den / zden;
    }
  }
  return p;
}

ChartReport verify_chart(const ChartPoint& p) {
  ChartReport report;
  const std::size_t size = p.W.rows();
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t s = r + 1; s < size; ++s) {
      for (std::size_t a = 0; a < size; ++a) {
        for (std::size_t b = a + 1; b < size; ++b) {
          ++report.minors_checked;
          if (p.W.at(r, a) * p.W.at(s, b) != p.W.at(r, b) * p.W.at(s, a)) report.rank_one = false;
        }
      }
    }
  }
  for (std::size_t r = 0; r < size; ++r) {
    for (std::size_t a = 0; a < size; ++a) {
      if (p.Z.at(r, a) == 0) {
        report.skipped.emplace_back(static_cast<int>(r) + 2, p.m + 1 + static_cast<int>(a));
        continue;
      }
      ++report.entries_checked;
      if (p.Z.at(r, a) * (p.W.at(r, a) - 1) != 1) report.z_identity = false;
    }
  }
  return report;
}

ChartReport verify_chart(const Configuration& c) { return verify_chart(chart_coordinates(c)); }

bool completion_independent(const Configuration& c, std::size_t alternatives) {
  const ChartPoint p = chart_coordinates(c);
  const BracketTable table(c);
  for (int i = 2; i <= p.m; ++i) {
    for (int j = p.m + 1; j < 2 * p.m; ++j) {
      const auto gammas = good_completions(p.m, i, j);
      for (std::size_t t = 0; t < std::min(alternatives, gammas.size()); ++t) {
        const Rational w = table.evaluate(w_numerator(p.m, i, j, gammas[t])) /
                           table.evaluate(w_denominator(p.m, i, j, gammas[t]));
        if (w != p.W.at(i - 2, j - p.m - 1)) return false;
      }
    }
  }
  return true;
}

}  // namespace p1inv
