#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p1inv/combination.hpp"
#include "p1inv/evaluation.hpp"
#include "p1inv/graph.hpp"
#include "p1inv/linalg.hpp"
#include "p1inv/rational.hpp"
#include "p1inv/straightening.hpp"

namespace p1inv {

/// Multiset of canonical graphs, kept sorted.
using Monomial = std::vector<CanonicalGraph>;

/// Polynomial in the variables X_G. Factors are usually perfect matchings;
/// clump images carry general graphs. All monomials have the same number of
/// factors.
class GraphPolynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit GraphPolynomial(int n) : n_(n) {}

  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Number of factors per monomial; nullopt for the zero polynomial.
  std::optional<int> degree() const noexcept { return degree_; }

  /// Adds coeff * prod X_f. Factors are canonicalized, signs folded into the
  /// coefficient. Throws DegreeMismatch, VertexCountMismatch.
  void add(const std::vector<Graph>& factors, const Rational& coeff);
  void add_monomial(Monomial m, const Rational& coeff);
  void add(const GraphPolynomial& other, const Rational& scale = 1);

  bool is_matching_polynomial() const;

  bool operator==(const GraphPolynomial& other) const { return n_ == other.n_ && terms_ == other.terms_; }

 private:
  int n_;
  std::optional<int> degree_;
  Terms terms_;
};

std::string to_string(const GraphPolynomial& p);

/// Value of p at a configuration. Throws LengthMismatch.
Rational evaluate_polynomial(const GraphPolynomial& p, const BracketTable& table);
Rational evaluate_polynomial(const GraphPolynomial& p, const Configuration& c);

/// The non-crossing perfect matchings of 1..n, indexed in sorted order. They
/// are the coordinates of the ring modulo the sign and three-term relations.
class NoncrossingBasis {
 public:
  explicit NoncrossingBasis(int n);

  int n() const noexcept { return n_; }
  std::size_t size() const noexcept { return matchings_.size(); }
  const CanonicalGraph& matching(std::size_t i) const { return matchings_[i]; }
  const std::vector<CanonicalGraph>& matchings() const noexcept { return matchings_; }
  std::optional<std::size_t> index_of(const CanonicalGraph& g) const;

  /// All multisets of k variable indices, as sorted tuples in lexicographic order.
  std::vector<std::vector<std::size_t>> monomials(int k) const;

 private:
  int n_;
  std::vector<CanonicalGraph> matchings_;
  std::map<CanonicalGraph, std::size_t> index_;
};

/// Polynomial in the non-crossing matching variables; keys are sorted index
/// tuples into a NoncrossingBasis.
struct NcPolynomial {
  int n = 0;
  int degree = 0;
  std::map<std::vector<std::size_t>, Rational> terms;

  bool is_zero() const noexcept { return terms.empty(); }
  void add(const std::vector<std::size_t>& key, const Rational& coeff);
  /// Coordinates over `monomials` (as returned by NoncrossingBasis::monomials).
  RationalVector coordinates(const std::vector<std::vector<std::size_t>>& monomials) const;
  GraphPolynomial to_graph_polynomial(const NoncrossingBasis& basis) const;
};

/// For each 4-set i<j<k<l and matching G of the other vertices:
/// X_{ij kl G} - X_{ik jl G} + X_{il jk G}. Throws OddVertexCount.
std::vector<GraphCombination> plucker_linear_relations(int n);

/// X_{G1 D1} X_{G2 D2} - X_{G1 D2} X_{G2 D1}, with D1, D2 the two
/// non-crossing matchings of a 4-set and G1 < G2 non-crossing matchings of its
/// complement; duplicates (up to sign) removed. Empty for n <= 6.
std::vector<GraphPolynomial> simple_binomial_relations(int n);

/// The cubic relation on six points (primitive integer generator of the cubic
/// relation space, positive leading coefficient), extended for n >= 8 by the
/// edges 7-8, 9-10, ... in every factor. Throws VertexCountTooSmall,
/// OddVertexCount.
GraphPolynomial segre_cubic(int n);

/// sum over all permutations s of sgn(s) X_{s(g)}^power. Throws BadExponent,
/// NotAMatching, OddVertexCount.
GraphPolynomial odd_power_relation(int n, const Graph& matching, int power);

/// Straightening of a single matching variable. Throws NotAMatching.
GraphCombination expand_variable(const Graph& matching, Straightener& straightener);
GraphCombination expand_variable(const Graph& matching);

/// Substitutes each matching variable by its non-crossing expansion.
/// Throws NotAMatching.
NcPolynomial reduce_to_noncrossing_vars(const GraphPolynomial& p, Straightener& straightener);
NcPolynomial reduce_to_noncrossing_vars(const GraphPolynomial& p);

/// Multiplies each monomial out into one graph and straightens. Zero exactly
/// when p vanishes as a function of the points.
GraphCombination ring_normal_form(const GraphPolynomial& p, Straightener& straightener);
GraphCombination ring_normal_form(const GraphPolynomial& p);

/// Kernel of the map sending degree-k monomials in the non-crossing matching
/// variables to the non-crossing basis of multidegree (k,...,k).
struct RelationSpace {
  int n = 0;
  int degree = 0;
  std::vector<std::vector<std::size_t>> monomials;
  std::size_t target_dimension = 0;
  std::vector<RationalVector> kernel;

  std::size_t dimension() const noexcept { return kernel.size(); }
};

RelationSpace relation_space(int n, int k, Straightener& straightener);
RelationSpace quadric_relation_space(int n);

struct CertificateTerm {
  Rational coeff;
  std::size_t generator_index = 0;
  std::vector<std::size_t> cofactor;  ///< indices into the NoncrossingBasis
};

struct MembershipResult {
  bool member = false;
  std::vector<CertificateTerm> certificate;
  std::size_t columns = 0;  ///< size of the spanning set that was searched
  std::size_t rows = 0;
};

/// Decides whether `candidate` lies in the degree-k part of the ideal spanned
/// by the generators together with the linear relations. Throws
/// DegreeMismatch, VertexCountMismatch.
MembershipResult ideal_membership(const GraphPolynomial& candidate,
                                  const std::vector<GraphPolynomial>& generators, int k,
                                  Straightener& straightener);
MembershipResult ideal_membership(const GraphPolynomial& candidate,
                                  const std::vector<GraphPolynomial>& generators, int k);

/// Recomputes sum coeff * cofactor * generator and compares with the reduced
/// candidate.
bool verify_certificate(const GraphPolynomial& candidate, const std::vector<GraphPolynomial>& generators,
                        const MembershipResult& result, Straightener& straightener);

/// Image of a polynomial under the clump identification; monomials with a
/// factor that acquires a loop drop out.
GraphPolynomial clump_map(const GraphPolynomial& p, const std::vector<std::vector<int>>& clumps);

}  // namespace p1inv
