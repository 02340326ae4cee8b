#include "p1inv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "p1inv/error.hpp"

namespace p1inv {

WeightVector::WeightVector(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorKind::InvalidWeight, "weight vector is empty");
  for (int w : weights_) {
    if (w < 1) throw Error(ErrorKind::InvalidWeight, "weights must be positive integers");
    total_ += w;
  }
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorKind::VertexOutOfRange, "negative vertex count");
  for (const Edge& e : edges_) {
    if (e.tail < 1 || e.tail > n_ || e.head < 1 || e.head > n_) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "edge " + std::to_string(e.tail) + "->" + std::to_string(e.head) +
                      " outside 1.." + std::to_string(n_));
    }
    if (e.tail == e.head) {
      throw Error(ErrorKind::LoopEdge, "loop at vertex " + std::to_string(e.tail));
    }
  }
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  auto a = edges_;
  auto b = other.edges_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

CanonicalGraph CanonicalGraph::from_sorted(int n, std::vector<Edge> edges) {
  for (const Edge& e : edges) {
    if (e.tail >= e.head) {
      throw Error(ErrorKind::VertexOutOfRange, "edge not in canonical orientation");
    }
  }
  if (!std::is_sorted(edges.begin(), edges.end())) {
    throw Error(ErrorKind::VertexOutOfRange, "edges not sorted");
  }
  return CanonicalGraph(Graph(n, std::move(edges)));
}

std::strong_ordering CanonicalGraph::operator<=>(const CanonicalGraph& other) const {
  if (auto c = n() <=> other.n(); c != 0) return c;
  return std::lexicographical_compare_three_way(edges().begin(), edges().end(),
                                                other.edges().begin(), other.edges().end());
}

bool CanonicalGraph::operator==(const CanonicalGraph& other) const {
  return n() == other.n() && edges() == other.edges();
}

Canonicalized canonicalize(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  int sign = 1;
  for (Edge& e : edges) {
    if (e.tail > e.head) {
      std::swap(e.tail, e.head);
      sign = -sign;
    }
  }
  std::sort(edges.begin(), edges.end());
  return {CanonicalGraph(Graph(g.n(), std::move(edges))), sign};
}

std::vector<int> multidegree(const Graph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
  for (const Edge& e : g.edges()) {
    ++deg[e.tail - 1];
    ++deg[e.head - 1];
  }
  return deg;
}

Graph multiply(const Graph& g, const Graph& h) {
  if (g.n() != h.n()) {
    throw Error(ErrorKind::VertexCountMismatch,
                std::to_string(g.n()) + " vs " + std::to_string(h.n()));
  }
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), h.edges().begin(), h.edges().end());
  return Graph(g.n(), std::move(edges));
}

CanonicalGraph multiply(const CanonicalGraph& g, const CanonicalGraph& h) {
  if (g.n() != h.n()) {
    throw Error(ErrorKind::VertexCountMismatch,
                std::to_string(g.n()) + " vs " + std::to_string(h.n()));
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() + h.edges().size());
  std::merge(g.edges().begin(), g.edges().end(), h.edges().begin(), h.edges().end(),
             std::back_inserter(edges));
  return CanonicalGraph::from_sorted(g.n(), std::move(edges));
}

bool edges_cross(const Edge& e, const Edge& f) {
  const int a = std::min(e.tail, e.head);
  const int b = std::max(e.tail, e.head);
  const int c = f.tail;
  const int d = f.head;
  if (c == a || c == b || d == a || d == b) return false;
  const bool c_inside = a < c && c < b;
  const bool d_inside = a < d && d < b;
  return c_inside != d_inside;
}

std::vector<std::pair<std::size_t, std::size_t>> crossing_pairs(const Graph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_cross(edges[i], edges[j])) out.emplace_back(i, j);
    }
  }
  return out;
}

bool is_noncrossing(const Graph& g) {
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges_cross(edges[i], edges[j])) return false;
    }
  }
  return true;
}

namespace {

// Vertex i contributes d_i consecutive stubs around the circle. Non-crossing
// multigraphs are exactly the non-crossing perfect matchings of the stub
// sequence that never pair two stubs of one vertex; a left-to-right sweep
// with a stack of open stubs generates those matchings (innermost arcs close
// first).
class NoncrossingEnumerator {
 public:
  NoncrossingEnumerator(int n, std::span<const int> degree) : n_(n) {
    for (int v = 1; v <= n; ++v) {
      for (int k = 0; k < degree[v - 1]; ++k) owner_.push_back(v);
    }
  }

  std::vector<CanonicalGraph> run() {
    sweep(0);
    std::sort(found_.begin(), found_.end());
    found_.erase(std::unique(found_.begin(), found_.end()), found_.end());
    return std::move(found_);
  }

 private:
  void sweep(std::size_t pos) {
    const std::size_t remaining = owner_.size() - pos;
    if (open_.size() > remaining) return;
    if (pos == owner_.size()) {
      auto edges = edges_;
      std::sort(edges.begin(), edges.end());
      found_.push_back(CanonicalGraph::from_sorted(n_, std::move(edges)));
      return;
    }
    const int v = owner_[pos];
    // Close against the innermost open stub.
    if (!open_.empty() && owner_[open_.back()] != v) {
      const std::size_t top = open_.back();
      open_.pop_back();
      edges_.push_back({owner_[top], v});
      sweep(pos + 1);
      edges_.pop_back();
      open_.push_back(top);
    }
    // Open a new arc.
    if (open_.size() + 1 <= remaining - 1) {
      open_.push_back(pos);
      sweep(pos + 1);
      open_.pop_back();
    }
  }

  int n_;
  std::vector<int> owner_;
  std::vector<std::size_t> open_;
  std::vector<Edge> edges_;
  std::vector<CanonicalGraph> found_;
};

void matchings_rec(std::vector<bool>& used, std::vector<Edge>& edges, int n,
                   std::vector<CanonicalGraph>& out) {
  int first = 0;
  for (int v = 1; v <= n; ++v) {
    if (!used[v]) {
      first = v;
      break;
    }
  }
  if (first == 0) {
    out.push_back(CanonicalGraph::from_sorted(n, edges));
    return;
  }
  used[first] = true;
  for (int w = first + 1; w <= n; ++w) {
    if (used[w]) continue;
    used[w] = true;
    edges.push_back({first, w});
    matchings_rec(used, edges, n, out);
    edges.pop_back();
    used[w] = false;
  }
  used[first] = false;
}

}  // namespace

std::vector<CanonicalGraph> enumerate_noncrossing(int n, std::span<const int> degree) {
  if (static_cast<int>(degree.size()) != n) {
    throw Error(ErrorKind::LengthMismatch, "degree vector length differs from n");
  }
  int sum = 0;
  for (int d : degree) {
    if (d < 0) throw Error(ErrorKind::InvalidWeight, "negative degree entry");
    sum += d;
  }
  if (sum % 2 != 0) throw Error(ErrorKind::OddDegreeSum, "sum " + std::to_string(sum));
  return NoncrossingEnumerator(n, degree).run();
}

std::vector<CanonicalGraph> enumerate_perfect_matchings(int n) {
  if (n % 2 != 0) throw Error(ErrorKind::OddVertexCount, std::to_string(n));
  std::vector<CanonicalGraph> out;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<Edge> edges;
  matchings_rec(used, edges, n, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_perfect_matching(const Graph& g) {
  const auto deg = multidegree(g);
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 1; });
}

int epsilon(const WeightVector& w) { return w.total() % 2 == 0 ? 1 : 2; }

std::string to_string(const Graph& g) {
  std::ostringstream os;
  bool first = true;
  for (const Edge& e : g.edges()) {
    if (!first) os << ' ';
    first = false;
    os << e.tail << (e.tail < e.head ? "-" : ">") << e.head;
  }
  return os.str();
}

std::size_t CanonicalGraphHash::operator()(const CanonicalGraph& g) const noexcept {
  std::size_t h = std::hash<int>{}(g.n());
  for (const Edge& e : g.edges()) {
    const std::size_t v = static_cast<std::size_t>(e.tail) * 1315423911u + e.head;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace p1inv
