#include "p1inv/evaluation.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "p1inv/error.hpp"

namespace p1inv {

bool coincide(const ProjectivePoint& a, const ProjectivePoint& b) {
  return a.u * b.v - b.u * a.v == 0;
}

Configuration::Configuration(std::vector<ProjectivePoint> points) : points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.u == 0 && p.v == 0) throw Error(ErrorKind::InvalidPoint, "point [0:0]");
  }
}

Configuration Configuration::parse_affine_list(std::string_view text) {
  std::vector<ProjectivePoint> pts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item == "inf" || item == "oo" || item == "infinity") {
      pts.push_back(ProjectivePoint::infinity());
    } else {
      pts.push_back(ProjectivePoint::affine(parse_rational(item)));
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Configuration(std::move(pts));
}

Configuration Configuration::transformed(const Rational& a, const Rational& b, const Rational& c,
                                         const Rational& d) const {
  if (a * d - b * c == 0) throw Error(ErrorKind::InvalidPoint, "singular transformation");
  std::vector<ProjectivePoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.push_back({a * p.u + b * p.v, c * p.u + d * p.v});
  return Configuration(std::move(out));
}

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "stable";
    case Stability::StrictlySemistable: return "strictlySemistable";
    case Stability::Unstable: return "unstable";
  }
  return "unknown";
}

Stability stability(const Configuration& c, const WeightVector& w) {
  if (c.size() != w.size()) {
    throw Error(ErrorKind::LengthMismatch, std::to_string(c.size()) + " points, " +
                                               std::to_string(w.size()) + " weights");
  }
  const std::size_t n = c.size();
  std::vector<bool> seen(n, false);
  int heaviest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int weight = 0;
    for (std::size_t j = i; j < n; ++j) {
      if (!seen[j] && coincide(c.points()[i], c.points()[j])) {
        seen[j] = true;
        weight += w[j];
      }
    }
    heaviest = std::max(heaviest, weight);
  }
  if (2 * heaviest < w.total()) return Stability::Stable;
  if (2 * heaviest == w.total()) return Stability::StrictlySemistable;
  return Stability::Unstable;
}

Rational evaluate(const Graph& g, const Configuration& c) {
  if (static_cast<std::size_t>(g.n()) != c.size()) {
    throw Error(ErrorKind::LengthMismatch, "graph on " + std::to_string(g.n()) + " vertices, " +
                                               std::to_string(c.size()) + " points");
  }
  Rational value = 1;
  for (const Edge& e : g.edges()) {
    const auto& t = c.point(e.tail);
    const auto& h = c.point(e.head);
    value *= h.u * t.v - t.u * h.v;
    if (value == 0) break;
  }
  return value;
}

Rational evaluate_combination(const GraphCombination& comb, const Configuration& c) {
  if (static_cast<std::size_t>(comb.n()) != c.size()) {
    throw Error(ErrorKind::LengthMismatch, "combination on " + std::to_string(comb.n()) +
                                               " vertices, " + std::to_string(c.size()) + " points");
  }
  return BracketTable(c).evaluate(comb);
}

BracketTable::BracketTable(const Configuration& c)
    : n_(static_cast<int>(c.size())), table_(static_cast<std::size_t>(n_) * n_) {
  for (int a = 1; a <= n_; ++a) {
    for (int b = 1; b <= n_; ++b) {
      const auto& t = c.point(a);
      const auto& h = c.point(b);
      table_[(a - 1) * n_ + (b - 1)] = h.u * t.v - t.u * h.v;
    }
  }
}

Rational BracketTable::evaluate(const Graph& g) const {
  if (g.n() != n_) throw Error(ErrorKind::LengthMismatch, "graph/configuration size");
  Rational value = 1;
  for (const Edge& e : g.edges()) {
    value *= bracket(e.tail, e.head);
    if (value == 0) break;
  }
  return value;
}

Rational BracketTable::evaluate(const GraphCombination& comb) const {
  if (comb.n() != n_) throw Error(ErrorKind::LengthMismatch, "combination/configuration size");
  Rational sum = 0;
  for (const auto& [g, coeff] : comb.terms()) sum += coeff * evaluate(g.graph());
  return sum;
}

Configuration random_stable_configuration(const WeightVector& w, std::uint64_t seed) {
  for (int wi : w.values()) {
    if (2 * wi >= w.total()) {
      throw Error(ErrorKind::NoStableConfiguration,
                  "weight " + std::to_string(wi) + " is at least half of " + std::to_string(w.total()));
    }
  }
  constexpr long kRange = 10000;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-kRange, kRange);
  std::set<long> used;
  std::vector<ProjectivePoint> pts;
  pts.reserve(w.size());
  while (pts.size() < w.size()) {
    const long x = coord(rng);
    if (!used.insert(x).second) continue;
    pts.push_back(ProjectivePoint::affine(Rational(x)));
  }
  return Configuration(std::move(pts));
}

}  // namespace p1inv
