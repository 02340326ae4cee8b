#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "p1inv/degree.hpp"

using namespace p1inv;

namespace {

Integer deg(std::vector<int> w) { return moduli_degree(WeightVector(std::move(w))); }

std::vector<int> scaled(std::vector<int> w, int d) {
  for (int& x : w) x *= d;
  return w;
}

}  // namespace

TEST_CASE("degree golden values") {
  CHECK(deg({1, 1, 1, 1}) == 1);
  CHECK(deg({1, 1, 1, 1, 1, 1}) == 3);
  CHECK(deg({2, 2, 2, 2, 2}) == 5);
  CHECK(deg(std::vector<int>(8, 1)) == 40);
  CHECK(deg(std::vector<int>(10, 1)) == 1225);
  CHECK(deg({3, 3, 3, 3}) == 3);
  CHECK(deg({3, 2, 1}) == 1);
  CHECK(deg({2, 2, 1, 1}) == 1);
  CHECK(deg({2, 2, 2}) == 1);
  CHECK(deg({2, 1, 1, 1, 1}) == 1);
  for (int d = 1; d <= 5; ++d) CHECK(deg({d, d, d, d}) == d);
  // Weight order does not matter.
  CHECK(deg({1, 2, 1, 1, 1}) == 1);
}

TEST_CASE("degree errors") {
  CHECK_ERROR_KIND(deg({2, 2, 1}), ErrorKind::OddTotalWeight);
  CHECK_ERROR_KIND(deg({5, 1, 1, 1}), ErrorKind::EmptyModuli);
  CHECK_ERROR_KIND(deg({1, 1}), ErrorKind::DegenerateModuli);
  CHECK_ERROR_KIND(deg({3}), ErrorKind::OddTotalWeight);
  CHECK_ERROR_KIND(deg({2}), ErrorKind::EmptyModuli);
}

TEST_CASE("boundary weights") {
  CHECK(is_boundary(WeightVector({3, 1, 1, 1})));
  CHECK(is_boundary(WeightVector({3, 2, 1})));
  CHECK_FALSE(is_boundary(WeightVector({1, 1, 1, 1, 1, 1})));
  CHECK(deg({3, 1, 1, 1}) >= 0);
}

TEST_CASE("scaling law") {
  CHECK(deg(scaled(std::vector<int>(6, 1), 2)) == 8 * 3);
  CHECK(deg(scaled(std::vector<int>(6, 1), 3)) == 27 * 3);
  CHECK(deg(scaled(std::vector<int>(8, 1), 2)) == 32 * 40);
  CHECK(deg(scaled({2, 2, 2, 2, 2}, 2)) == 4 * 5);
}

TEST_CASE("greedy gamma has the right multidegree") {
  for (const auto& w : std::vector<std::vector<int>>{{1, 1, 1, 1, 1, 1}, {4, 3, 3, 2}, {2, 2, 2, 2, 2}, {3, 3, 1, 1}}) {
    const auto gamma = greedy_gamma(w);
    CHECK(multidegree(Graph(static_cast<int>(w.size()), gamma)) == w);
  }
  CHECK(greedy_gamma({1, 1, 1, 1}) == std::vector<Edge>{{1, 2}, {3, 4}});
}

TEST_CASE("the degree does not depend on the chosen graph") {
  std::mt19937_64 rng(13);
  int tested = 0;
  while (tested < 20) {
    const int n = 4 + static_cast<int>(rng() % 5);
    std::vector<int> w(n);
    int total = 0;
    for (int& x : w) total += (x = 1 + static_cast<int>(rng() % 4));
    if (total % 2 != 0 || 2 * *std::max_element(w.begin(), w.end()) > total) continue;
    ++tested;
    const Integer reference = DegreeCalculator().degree(WeightVector(w));
    for (int k = 0; k < 5; ++k) {
      DegreeCalculator random(random_gamma(rng()), false);
      CHECK(random.degree(WeightVector(w)) == reference);
    }
  }
}

TEST_CASE("memoized and memo-free runs agree") {
  for (const auto& w : std::vector<std::vector<int>>{{1, 1, 1, 1, 1, 1, 1, 1}, {3, 2, 2, 2, 1}, {2, 2, 2, 2, 2, 2}}) {
    DegreeCalculator memo;
    DegreeCalculator plain(greedy_gamma, false);
    CHECK(memo.degree(WeightVector(w)) == plain.degree(WeightVector(w)));
    CHECK(memo.memo_size() > 0);
    CHECK(plain.memo_size() == 0);
  }
}

TEST_CASE("trace") {
  DegreeCalculator calc;
  const auto t = calc.trace(WeightVector({2, 2, 2, 2, 2}));
  CHECK(t.value == 5);
  CHECK(t.rule == DegreeTrace::Rule::Split);
  CHECK(t.weights == std::vector<int>{2, 2, 2, 2, 2});
  CHECK(multidegree(Graph(5, t.gamma)) == t.weights);
  Integer sum = 0;
  for (const auto& b : t.branches) {
    if (b.contributes) sum += b.multiplicity * b.child->value;
  }
  CHECK(sum == t.value);

  const auto r = calc.trace(WeightVector({3, 3, 1, 1}));
  CHECK(r.rule == DegreeTrace::Rule::Reduce);
  CHECK(r.value == 1);
  CHECK(calc.trace(WeightVector({1, 1, 1, 1, 1, 1})).value == 3);
  CHECK(to_string(DegreeTrace::Rule::Veronese) == "veronese");
}
