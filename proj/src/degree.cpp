#include "p1inv/degree.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "p1inv/error.hpp"

namespace p1inv {

namespace {

std::vector<int> sorted_positive(std::span<const int> w) {
  std::vector<int> out;
  for (int x : w) {
    if (x > 0) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int total_of(const std::vector<int>& w) { return std::accumulate(w.begin(), w.end(), 0); }

void validate(const WeightVector& w) {
  if (w.total() % 2 != 0) {
    throw Error(ErrorKind::OddTotalWeight,
                "total weight " + std::to_string(w.total()) +
                    " is odd; the lowest-degree invariants then have degree 2, so pass the doubled weights");
  }
  for (int x : w.values()) {
    if (2 * x > w.total()) {
      throw Error(ErrorKind::EmptyModuli, "weight " + std::to_string(x) + " exceeds half the total");
    }
  }
}

// Remaining degrees stay realizable by a loopless multigraph.
bool realizable(const std::vector<int>& d) {
  int sum = 0;
  int max = 0;
  for (int x : d) {
    sum += x;
    max = std::max(max, x);
  }
  return sum % 2 == 0 && 2 * max <= sum;
}

std::vector<int> merged(const std::vector<int>& w, int j, int k) {
  std::vector<int> out;
  for (int p = 0; p < static_cast<int>(w.size()); ++p) {
    if (p != j && p != k) out.push_back(w[p]);
  }
  out.push_back(w[j] + w[k]);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<int> reduced(const std::vector<int>& w) {
  std::vector<int> out = w;
  --out[0];
  --out[1];
  return sorted_positive(out);
}

std::map<std::pair<int, int>, int> multiplicities(const std::vector<Edge>& gamma) {
  std::map<std::pair<int, int>, int> m;
  for (const Edge& e : gamma) ++m[{std::min(e.tail, e.head), std::max(e.tail, e.head)}];
  return m;
}

void check_gamma(const std::vector<int>& w, const std::vector<Edge>& gamma) {
  const Graph g(static_cast<int>(w.size()), gamma);
  if (multidegree(g) != w) throw std::logic_error("Gamma chooser returned a graph of the wrong multidegree");
}

}  // namespace

std::vector<Edge> greedy_gamma(const std::vector<int>& weights) {
  std::vector<int> d = weights;
  std::vector<Edge> edges;
  for (;;) {
    int a = -1;
    int b = -1;
    for (int p = 0; p < static_cast<int>(d.size()); ++p) {
      if (d[p] == 0) continue;
      if (a < 0 || d[p] > d[a]) {
        b = a;
        a = p;
      } else if (b < 0 || d[p] > d[b]) {
        b = p;
      }
    }
    if (a < 0) break;
    if (b < 0) throw std::logic_error("degree sequence is not realizable");
    --d[a];
    --d[b];
    edges.push_back({std::min(a, b) + 1, std::max(a, b) + 1});
  }
  return edges;
}

GammaChooser random_gamma(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](const std::vector<int>& weights) {
    std::vector<int> d = weights;
    std::vector<Edge> edges;
    const int n = static_cast<int>(d.size());
    while (std::any_of(d.begin(), d.end(), [](int x) { return x > 0; })) {
      std::vector<std::pair<int, int>> options;
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (d[a] == 0 || d[b] == 0) continue;
          --d[a];
          --d[b];
          if (realizable(d)) options.emplace_back(a, b);
          ++d[a];
          ++d[b];
        }
      }
      if (options.empty()) throw std::logic_error("degree sequence is not realizable");
      const auto [a, b] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(*rng)];
      --d[a];
      --d[b];
      edges.push_back({a + 1, b + 1});
    }
    return edges;
  };
}

std::string to_string(DegreeTrace::Rule r) {
  switch (r) {
    case DegreeTrace::Rule::Point: return "point";
    case DegreeTrace::Rule::Veronese: return "veronese";
    case DegreeTrace::Rule::Reduce: return "reduce";
    case DegreeTrace::Rule::Split: return "split";
  }
  return "?";
}

DegreeCalculator::DegreeCalculator(GammaChooser chooser, bool memoize)
    : chooser_(std::move(chooser)), memoize_(memoize) {}

Integer DegreeCalculator::degree(const WeightVector& w) {
  validate(w);
  return compute(sorted_positive(w.values()));
}

Integer DegreeCalculator::compute(const std::vector<int>& w) {
  if (memoize_) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
  }
  const int n = static_cast<int>(w.size());
  const int total = total_of(w);
  Integer result;
  if (n < 3) {
    throw Error(ErrorKind::DegenerateModuli, "fewer than three points remain after reduction");
  } else if (n == 3) {
    result = 1;
  } else if (2 * (w[0] + w[1]) > total) {
    result = compute(reduced(w));
  } else if (n == 4) {
    if (w[0] != w[3]) throw std::logic_error("four balanced weights must be equal");
    result = w[0];
  } else {
    const auto gamma = chooser_(w);
    check_gamma(w, gamma);
    result = 0;
    for (const auto& [pair, m] : multiplicities(gamma)) {
      const int j = pair.first - 1;
      const int k = pair.second - 1;
      if (2 * (w[j] + w[k]) < total) result += m * compute(merged(w, j, k));
    }
  }
  if (memoize_) memo_.emplace(w, result);
  return result;
}

DegreeTrace DegreeCalculator::trace(const WeightVector& w) {
  validate(w);
  return *build_trace(sorted_positive(w.values()));
}

std::shared_ptr<const DegreeTrace> DegreeCalculator::build_trace(const std::vector<int>& w) {
  auto node = std::make_shared<DegreeTrace>();
  node->weights = w;
  const int n = static_cast<int>(w.size());
  const int total = total_of(w);
  if (n < 3) {
    throw Error(ErrorKind::DegenerateModuli, "fewer than three points remain after reduction");
  } else if (n == 3) {
    node->rule = DegreeTrace::Rule::Point;
    node->value = 1;
  } else if (2 * (w[0] + w[1]) > total) {
    node->rule = DegreeTrace::Rule::Reduce;
    auto child = build_trace(reduced(w));
    node->value = child->value;
    node->branches.push_back({1, 2, 1, true, std::move(child)});
  } else if (n == 4) {
    node->rule = DegreeTrace::Rule::Veronese;
    node->value = w[0];
  } else {
    node->rule = DegreeTrace::Rule::Split;
    node->gamma = chooser_(w);
    check_gamma(w, node->gamma);
    node->value = 0;
    for (const auto& [pair, m] : multiplicities(node->gamma)) {
      const int j = pair.first - 1;
      const int k = pair.second - 1;
      DegreeTrace::Branch b{pair.first, pair.second, m, 2 * (w[j] + w[k]) < total, nullptr};
      if (b.contributes) {
        b.child = build_trace(merged(w, j, k));
        node->value += m * b.child->value;
      }
      node->branches.push_back(std::move(b));
    }
  }
  return node;
}

Integer moduli_degree(const WeightVector& w) { return DegreeCalculator().degree(w); }

bool is_boundary(const WeightVector& w) {
  return std::any_of(w.values().begin(), w.values().end(), [&](int x) { return 2 * x == w.total(); });
}

}  // namespace p1inv
