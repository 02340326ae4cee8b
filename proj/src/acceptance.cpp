#include "p1inv/acceptance.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "p1inv/chart.hpp"
#include "p1inv/degree.hpp"
#include "p1inv/error.hpp"
#include "p1inv/evaluation.hpp"
#include "p1inv/kempe.hpp"
#include "p1inv/linalg.hpp"
#include "p1inv/relations.hpp"
#include "p1inv/sampling.hpp"
#include "p1inv/straightening.hpp"

namespace p1inv::acceptance {

namespace {

class Checks {
 public:
  void expect(bool ok, std::string line) {
    all_ &= ok;
    lines_.push_back((ok ? "ok   " : "FAIL ") + std::move(line));
  }
  bool all() const noexcept { return all_; }
  std::vector<std::string> take() { return std::move(lines_); }

 private:
  bool all_ = true;
  std::vector<std::string> lines_;
};

std::string str(const Integer& z) { return z.get_str(); }

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

std::vector<int> repeat(int n, int value) { return std::vector<int>(static_cast<std::size_t>(n), value); }

void check_degree(Checks& checks, const std::vector<int>& w, const Integer& expected) {
  const Integer got = moduli_degree(WeightVector(w));
  std::ostringstream os;
  os << "deg(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ") = " << str(got) << ", expected " << str(expected);
  checks.expect(got == expected, os.str());
}

void criterion1(Checks& checks, Tier, std::uint64_t) {
  const Integer equilateral[] = {1, 3, 40, 1225};
  for (int k = 0; k < 4; ++k) check_degree(checks, ones(4 + 2 * k), equilateral[k]);
  check_degree(checks, repeat(5, 2), 5);
  for (int d = 1; d <= 5; ++d) check_degree(checks, repeat(4, d), d);
  for (const auto& w : std::vector<std::vector<int>>{{3, 2, 1}, {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}}) {
    check_degree(checks, w, 1);
  }
}

void criterion2(Checks& checks, Tier, std::uint64_t) {
  check_degree(checks, repeat(6, 2), 8 * 3);
  check_degree(checks, repeat(6, 3), 27 * 3);
  check_degree(checks, repeat(8, 2), 32 * 40);
}

void criterion3(Checks& checks, Tier, std::uint64_t) {
  const auto m8 = enumerate_noncrossing(8, ones(8)).size();
  checks.expect(m8 == 14, "non-crossing matchings on 8 vertices: " + std::to_string(m8));
  const auto r8 = enumerate_noncrossing(8, repeat(8, 2)).size();
  checks.expect(r8 == 91, "non-crossing 2-regular graphs on 8 vertices: " + std::to_string(r8));
  const std::size_t catalan[] = {2, 5, 14, 42, 132};
  for (int k = 0; k < 5; ++k) {
    const int n = 4 + 2 * k;
    const auto c = enumerate_noncrossing(n, ones(n)).size();
    checks.expect(c == catalan[k], "non-crossing matchings on " + std::to_string(n) + " vertices: " +
                                       std::to_string(c) + ", expected " + std::to_string(catalan[k]));
  }
}

void criterion4(Checks& checks, Tier, std::uint64_t) {
  Straightener straightener;
  const RelationSpace v8 = relation_space(8, 2, straightener);
  checks.expect(v8.dimension() == 14, "dim V for n=8: " + std::to_string(v8.dimension()) + " (" +
                                          std::to_string(v8.monomials.size()) + " monomials, target " +
                                          std::to_string(v8.target_dimension) + ")");
  const auto binomials = simple_binomial_relations(8);
  checks.expect(binomials.size() == 35, "simple binomial relations for n=8: " + std::to_string(binomials.size()));

  std::vector<RationalVector> reduced;
  for (const auto& b : binomials) reduced.push_back(reduce_to_noncrossing_vars(b, straightener).coordinates(v8.monomials));
  const std::size_t rank_binomials = rank(RationalMatrix::from_columns(v8.monomials.size(), reduced));
  auto combined = reduced;
  combined.insert(combined.end(), v8.kernel.begin(), v8.kernel.end());
  const std::size_t rank_combined = rank(RationalMatrix::from_columns(v8.monomials.size(), combined));
  checks.expect(rank_binomials == 14 && rank_combined == 14,
                "reduced binomials have rank " + std::to_string(rank_binomials) + "; together with V rank " +
                    std::to_string(rank_combined));

  const RelationSpace v6 = relation_space(6, 2, straightener);
  checks.expect(v6.dimension() == 0, "dim V for n=6: " + std::to_string(v6.dimension()));
}

void criterion5(Checks& checks, Tier, std::uint64_t) {
  Straightener straightener;
  const GraphPolynomial s8 = segre_cubic(8);
  const auto gens8 = simple_binomial_relations(8);
  const MembershipResult r8 = ideal_membership(s8, gens8, 3, straightener);
  checks.expect(r8.member, "cubic relation on 8 points in the binomial ideal: " + std::string(r8.member ? "yes" : "no") +
                               " (" + std::to_string(r8.columns) + " spanning vectors, " + std::to_string(r8.rows) +
                               " monomials)");
  const bool verified = verify_certificate(s8, gens8, r8, straightener);
  checks.expect(verified, "certificate with " + std::to_string(r8.certificate.size()) + " terms re-verifies");

  const GraphPolynomial s6 = segre_cubic(6);
  const MembershipResult r6 = ideal_membership(s6, simple_binomial_relations(6), 3, straightener);
  checks.expect(!r6.member, "cubic relation on 6 points not in the binomial ideal");

  for (int n : {6, 8, 10}) {
    const bool zero = ring_normal_form(segre_cubic(n), straightener).is_zero();
    checks.expect(zero, "ring normal form of the cubic relation vanishes for n=" + std::to_string(n));
  }
  const bool nontrivial = !reduce_to_noncrossing_vars(s6, straightener).is_zero();
  checks.expect(nontrivial, "cubic relation on 6 points is nonzero modulo the linear relations");
}

bool relation_vanishes(const GraphPolynomial& p, int samples, std::uint64_t& seed) {
  const WeightVector w(ones(p.n()));
  for (int s = 0; s < samples; ++s) {
    if (evaluate_polynomial(p, BracketTable(random_stable_configuration(w, seed++))) != 0) return false;
  }
  return true;
}

bool combination_vanishes(const GraphCombination& c, int samples, std::uint64_t& seed) {
  const WeightVector w(ones(c.n()));
  for (int s = 0; s < samples; ++s) {
    if (BracketTable(random_stable_configuration(w, seed++)).evaluate(c) != 0) return false;
  }
  return true;
}

// Evaluation matrix of all non-crossing graphs of multidegree d at as many
// random configurations; up to 3 redraws on rank deficiency.
bool basis_full_rank(int n, const std::vector<int>& d, std::uint64_t& seed, std::size_t& size) {
  const auto graphs = enumerate_noncrossing(n, d);
  size = graphs.size();
  const WeightVector w(ones(n));
  for (int attempt = 0; attempt <= 3; ++attempt) {
    RationalMatrix m(graphs.size(), graphs.size());
    for (std::size_t r = 0; r < graphs.size(); ++r) {
      const BracketTable table(random_stable_configuration(w, seed++));
      for (std::size_t c = 0; c < graphs.size(); ++c) m.at(r, c) = table.evaluate(graphs[c].graph());
    }
    if (rank(m) == graphs.size()) return true;
  }
  return false;
}

void criterion6(Checks& checks, Tier tier, std::uint64_t seed) {
  const bool full = tier == Tier::Full;
  std::mt19937_64 rng(seed);
  std::uint64_t config_seed = seed * 1000003u + 17;

  const int combos = full ? 200 : 40;
  int straightening_failures = 0;
  Straightener straightener;
  for (int t = 0; t < combos; ++t) {
    const int n = std::uniform_int_distribution<int>(4, 10)(rng);
    const int edges = std::uniform_int_distribution<int>(1, 8)(rng);
    const GraphCombination c = random_combination(n, edges, 3, rng);
    const GraphCombination s = straightener.straighten(c);
    bool ok = true;
    for (const auto& [g, coeff] : s.terms()) ok &= is_noncrossing(g.graph());
    const WeightVector w(ones(n));
    for (int k = 0; k < 3 && ok; ++k) {
      const BracketTable table(random_stable_configuration(w, config_seed++));
      ok &= table.evaluate(c) == table.evaluate(s);
    }
    straightening_failures += !ok;
  }
  checks.expect(straightening_failures == 0, "straightening soundness on " + std::to_string(combos) +
                                                 " random combinations: " + std::to_string(straightening_failures) +
                                                 " failures");

  const int regular = full ? 100 : 20;
  int kempe_failures = 0;
  for (int t = 0; t < regular; ++t) {
    const int n = 4 + 2 * std::uniform_int_distribution<int>(0, 2)(rng);
    const int d = std::uniform_int_distribution<int>(1, 3)(rng);
    const Graph g = random_regular_graph(n, d, rng);
    const auto products = kempe_decompose(g);
    bool ok = true;
    for (const auto& p : products) {
      for (const auto& f : p.factors) ok &= is_perfect_matching(f);
    }
    const WeightVector w(ones(n));
    for (int k = 0; k < 3 && ok; ++k) {
      const BracketTable table(random_stable_configuration(w, config_seed++));
      Rational sum = 0;
      for (const auto& p : products) {
        Rational term = p.coeff;
        for (const auto& f : p.factors) term *= table.evaluate(f);
        sum += term;
      }
      ok &= sum == table.evaluate(g);
    }
    kempe_failures += !ok;
  }
  checks.expect(kempe_failures == 0, "Kempe decomposition soundness on " + std::to_string(regular) +
                                         " random regular graphs: " + std::to_string(kempe_failures) + " failures");

  const int samples = 10;
  std::size_t count = 0;
  bool linear_ok = true;
  for (int n : {4, 6, 8}) {
    for (const auto& r : plucker_linear_relations(n)) {
      linear_ok &= combination_vanishes(r, samples, config_seed);
      ++count;
    }
  }
  checks.expect(linear_ok, std::to_string(count) + " linear exchange relations (n=4,6,8) vanish at " +
                               std::to_string(samples) + " configurations each");

  std::vector<std::pair<std::string, GraphPolynomial>> polys;
  for (const auto& b : simple_binomial_relations(8)) polys.emplace_back("binomial", b);
  for (int n : {6, 8, 10}) polys.emplace_back("cubic n=" + std::to_string(n), segre_cubic(n));
  const Graph m6(6, {{1, 2}, {3, 4}, {5, 6}});
  const Graph m8(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  polys.emplace_back("odd power n=6 i=3", odd_power_relation(6, m6, 3));
  polys.emplace_back("odd power n=8 i=3", odd_power_relation(8, m8, 3));
  polys.emplace_back("odd power n=8 i=5", odd_power_relation(8, m8, 5));
  int poly_failures = 0;
  for (const auto& [name, p] : polys) poly_failures += !relation_vanishes(p, samples, config_seed);
  checks.expect(poly_failures == 0, std::to_string(polys.size()) +
                                        " polynomial relations (35 binomial, 3 cubic, 3 odd-power) vanish at " +
                                        std::to_string(samples) + " configurations each: " +
                                        std::to_string(poly_failures) + " failures");

  for (const auto& [n, d] : std::vector<std::pair<int, std::vector<int>>>{{6, ones(6)}, {8, ones(8)}, {6, repeat(6, 2)}}) {
    std::size_t size = 0;
    const bool ok = basis_full_rank(n, d, config_seed, size);
    checks.expect(ok, "evaluation matrix of the " + std::to_string(size) + " non-crossing graphs (n=" +
                          std::to_string(n) + ", degree " + std::to_string(d.front()) + ") has full rank");
  }
}

void criterion7(Checks& checks, Tier, std::uint64_t) {
  Straightener straightener;
  const GraphPolynomial odd = odd_power_relation(6, Graph(6, {{1, 2}, {3, 4}, {5, 6}}), 3);
  checks.expect(ring_normal_form(odd, straightener).is_zero(), "odd-power relation (n=6, i=3) has ring normal form 0");
  const NoncrossingBasis basis(6);
  const auto monomials = basis.monomials(3);
  const RationalVector a = reduce_to_noncrossing_vars(odd, straightener).coordinates(monomials);
  const RationalVector b = reduce_to_noncrossing_vars(segre_cubic(6), straightener).coordinates(monomials);
  std::size_t pivot = 0;
  while (pivot < b.size() && b[pivot] == 0) ++pivot;
  bool proportional = pivot < b.size() && a[pivot] != 0;
  Rational ratio;
  if (proportional) {
    ratio = a[pivot] / b[pivot];
    for (std::size_t i = 0; i < a.size(); ++i) proportional &= a[i] == ratio * b[i];
  }
  checks.expect(proportional, "reduced odd-power relation is " +
                                  (proportional ? to_string(ratio) + " times" : std::string("not a multiple of")) +
                                  " the reduced cubic relation");
}

Configuration limit_configuration(int m) {
  std::vector<ProjectivePoint> pts;
  for (int a = 0; a < m; ++a) pts.push_back(ProjectivePoint::affine(0));
  for (int a = 0; a < m; ++a) pts.push_back(ProjectivePoint::infinity());
  return Configuration(std::move(pts));
}

void criterion8(Checks& checks, Tier tier, std::uint64_t seed) {
  const int samples = tier == Tier::Full ? 50 : 10;
  std::uint64_t config_seed = seed * 7919u + 3;
  for (int n : {8, 10}) {
    int failures = 0;
    int dependent = 0;
    for (int s = 0; s < samples; ++s) {
      const Configuration c = random_stable_configuration(WeightVector(ones(n)), config_seed++);
      failures += !verify_chart(c).ok();
      dependent += !completion_independent(c, 3);
    }
    checks.expect(failures == 0, "rank-one and Z(W-1)=1 identities at " + std::to_string(samples) +
                                     " random configurations, n=" + std::to_string(n) + ": " +
                                     std::to_string(failures) + " failures");
    const std::size_t alternatives = good_completions(n / 2, 2, n / 2 + 1).size();
    checks.expect(dependent == 0, "W entries agree across " + std::to_string(std::min<std::size_t>(3, alternatives)) +
                                      " good completions, n=" + std::to_string(n) + ": " + std::to_string(dependent) +
                                      " disagreements");
  }
  for (int m : {4, 5}) {
    const ChartPoint p = chart_coordinates(limit_configuration(m));
    bool zero = true;
    for (std::size_t r = 0; r < p.W.rows(); ++r)
      for (std::size_t c = 0; c < p.W.cols(); ++c) zero &= p.W.at(r, c) == 0;
    checks.expect(zero && verify_chart(p).ok(), "W is the zero matrix at (0^" + std::to_string(m) + ", inf^" +
                                                    std::to_string(m) + ") and the identities hold there");
  }
}

std::vector<std::vector<int>> adjacent_clumps(const std::vector<int>& w) {
  std::vector<std::vector<int>> clumps;
  int next = 1;
  for (int size : w) {
    std::vector<int> clump;
    for (int k = 0; k < size; ++k) clump.push_back(next++);
    clumps.push_back(std::move(clump));
  }
  return clumps;
}

void criterion9(Checks& checks, Tier, std::uint64_t seed) {
  for (const auto& w : std::vector<std::vector<int>>{{2, 1, 1, 1, 1}, {2, 2, 1, 1}}) {
    const auto clumps = adjacent_clumps(w);
    int total = 0;
    for (int x : w) total += x;
    const auto targets = enumerate_noncrossing(static_cast<int>(w.size()), w);
    std::size_t bad = 0;
    for (const auto& h : targets) bad += noncrossing_lifts(h, total, clumps).size() != 1;
    std::ostringstream os;
    os << "w=(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "): " << targets.size() << " non-crossing graphs, " << bad << " without a unique non-crossing lift";
    checks.expect(bad == 0, os.str());
  }

  // Binomial generators exist only from 8 points on; the 6-point weights
  // are covered vacuously, the 8-point ones carry the content.
  std::uint64_t config_seed = seed * 104729u + 5;
  Straightener straightener;
  for (const auto& w : std::vector<std::vector<int>>{
           {2, 1, 1, 1, 1}, {2, 2, 1, 1}, {2, 1, 1, 1, 1, 1, 1}, {2, 2, 1, 1, 1, 1}, {2, 2, 2, 1, 1}, {3, 1, 1, 1, 1, 1}}) {
    int total = 0;
    for (int x : w) total += x;
    const auto clumps = adjacent_clumps(w);
    const auto generators = simple_binomial_relations(total);
    std::size_t zero = 0;
    std::size_t relation = 0;
    std::size_t other = 0;
    for (const auto& g : generators) {
      const GraphPolynomial image = clump_map(g, clumps);
      if (image.is_zero()) {
        ++zero;
      } else if (image.terms().size() <= 2 && ring_normal_form(image, straightener).is_zero() &&
                 relation_vanishes(image, 3, config_seed)) {
        ++relation;
      } else {
        ++other;
      }
    }
    std::ostringstream os;
    os << "w=(";
    for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
    os << "): " << generators.size() << " binomial generators -> " << zero << " zero, " << relation
       << " binomial relations, " << other << " other";
    checks.expect(other == 0, os.str());
  }
}

struct Criterion {
  const char* name;
  double limit;
  void (*run)(Checks&, Tier, std::uint64_t);
};

const Criterion kCriteria[kCriterionCount] = {
    {"degree golden values", 10.0, criterion1},
    {"degree scaling law", 10.0, criterion2},
    {"non-crossing counts", 5.0, criterion3},
    {"quadric relation space", 30.0, criterion4},
    {"cubic relation membership", 120.0, criterion5},
    {"oracle property suites", 120.0, criterion6},
    {"odd-power identification", 60.0, criterion7},
    {"chart identities", 60.0, criterion8},
    {"clump reduction", 30.0, criterion9},
};

}  // namespace

CriterionResult run_criterion(int id, Tier tier, std::uint64_t seed) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criterion id must be 1..9");
  const Criterion& criterion = kCriteria[id - 1];
  CriterionResult result;
  result.id = id;
  result.name = criterion.name;
  result.limit_seconds = criterion.limit;
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    criterion.run(checks, tier, seed);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("unexpected exception: ") + e.what());
  }
  result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  result.checks_passed = checks.all();
  result.details = checks.take();
  return result;
}

std::vector<CriterionResult> run_all(Tier tier, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, tier, seed));
  return out;
}

}  // namespace p1inv::acceptance
